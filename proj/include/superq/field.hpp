#pragma once

#include <superq/poly.hpp>
#include <superq/rational.hpp>

#include <memory>
#include <string>
#include <vector>

namespace superq {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[t]/(m) for a monic polynomial m irreducible over Q. Degree 1 is plain Q.
/// Immutable; shared by every Scalar living in it.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// `monic` lists all deg+1 coefficients low to high, leading one required.
  static FieldPtr make(const Poly& monic);
  /// Q(sqrt(d)) for a non-square rational d.
  static FieldPtr quadratic(const Rat& d);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const Poly& minpoly() const { return minpoly_; }
  /// t^k mod minpoly for k in [deg, 2deg-2], as coefficient rows of length deg.
  const std::vector<std::vector<Rat>>& reduction_rows() const { return red_; }

  bool same_as(const NumberField& other) const;

 private:
  explicit NumberField(Poly monic);
  Poly minpoly_;
  std::vector<std::vector<Rat>> red_;
};

/// Element of the session number field, as a coefficient vector in the power
/// basis. A null field means plain Q (one coefficient); rationals coerce into
/// any field on mixed arithmetic. Values are immutable in spirit: all
/// operations produce fresh scalars.
class Scalar {
 public:
  Scalar() : c_(1, Rat(0)) {}
  Scalar(int v) : c_(1, Rat(v)) {}                 // NOLINT: implicit by design
  Scalar(long v) : c_(1, Rat(v)) {}                // NOLINT
  Scalar(const Rat& v) : c_(1, v) {}               // NOLINT
  Scalar(FieldPtr f, std::vector<Rat> coeffs);

  static Scalar generator(const FieldPtr& f);

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws unless the element lies in Q.
  Rat rational() const;
  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void align_with(const Scalar& o);
  void reduce();

  FieldPtr field_;            // null: plain rational
  std::vector<Rat> c_;        // size 1 (rational) or field degree
};

/// Deterministic-seed stream of small scalars for randomized searches.
class ScalarSampler {
 public:
  explicit ScalarSampler(uint64_t seed) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  /// Uniform-ish integer in [-span, span].
  long next_int(long span = 5) {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state_ >> 33) % (2 * span + 1)) - span;
  }

 private:
  uint64_t state_;
};

}  // namespace superq
