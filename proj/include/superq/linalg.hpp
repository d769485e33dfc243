#pragma once

#include <superq/eigen.hpp>
#include <superq/error.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace superq {

/// Polynomial with coefficients in the session field, low to high.
using SPoly = std::vector<Scalar>;

int spoly_deg(const SPoly& p);
void spoly_trim(SPoly& p);
SPoly spoly_monic(const SPoly& p);
SPoly spoly_mul(const SPoly& a, const SPoly& b);
SPoly spoly_divmod(const SPoly& a, const SPoly& b, SPoly& rem);
SPoly spoly_gcd(const SPoly& a, const SPoly& b);
SPoly spoly_derivative(const SPoly& p);
Scalar spoly_eval(const SPoly& p, const Scalar& x);
bool spoly_is_rational(const SPoly& p);
Poly spoly_to_rational(const SPoly& p);
std::string spoly_to_string(const SPoly& p);

/// Square root inside the session field when one exists (complete for Q and
/// quadratic fields, the only fields this project constructs on demand).
std::optional<Scalar> scalar_sqrt(const Scalar& s);

/// Roots of p lying in the session field. Complete for rational-coefficient p
/// over Q and quadratic fields; throws ExtensionNeeded when a factor of degree
/// >= 2 over the field blocks further splitting and `need_all` is set.
std::vector<Scalar> spoly_roots_in_field(const SPoly& p, bool need_all);

/// Result of exact Gauss/Bareiss elimination, normalized to reduced row
/// echelon form. Unique for a given row space, so every consumer downstream is
/// deterministic.
struct Rref {
  Mat r;                       // rank x cols, pivots 1, pivot cols cleared
  std::vector<Index> pivots;   // pivot column per row, increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Rref rref(const Mat& m);
Index rank(const Mat& m);

/// Canonical basis of the right null space: one vector per free column in
/// increasing order, scaled so the first nonzero entry is 1.
std::vector<Vec> kernel_basis(const Mat& m);

/// One exact solution of m x = rhs if consistent: free variables zero, so the
/// result is the lexicographically first echelon solution.
std::optional<Vec> solve_linear(const Mat& m, const Vec& rhs);

/// Monic minimal polynomial plus its squarefree flag (gcd with derivative
/// trivial, the characteristic-zero semisimplicity test).
std::pair<SPoly, bool> minimal_polynomial(const Mat& m);

Mat mat_from_columns(const std::vector<Vec>& cols, Index rows);
Mat mat_from_rows(const std::vector<Vec>& rows, Index cols);

/// Dense row-space builder: keeps an RREF basis, supports membership tests and
/// coordinates with respect to the echelon basis. Rows indexed by insertion of
/// pivots, i.e. sorted by pivot column.
class SpanBuilder {
 public:
  explicit SpanBuilder(Index ambient) : ambient_(ambient) {}

  bool insert(const Vec& v);          // true if the span grew
  bool contains(const Vec& v) const;
  /// Reduces v against the basis; if coords is nonnull it receives the
  /// coefficients of v along basis rows. Returns the residue.
  Vec reduce(const Vec& v, std::vector<Scalar>* coords = nullptr) const;
  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return rows_; }
  std::vector<Index> pivot_columns() const;

 private:
  Index ambient_;
  std::map<Index, size_t> pivot_;     // pivot col -> row index
  std::vector<Vec> rows_;             // fully reduced, lead 1, sorted by pivot
};

/// Sparse incremental echelon for large structured homogeneous systems
/// (Leibniz, cocycle and intertwiner equations). Rows arrive sparse; the
/// accumulated echelon keeps lead-1 rows keyed by pivot column. The kernel
/// extraction normalizes to RREF, so results do not depend on feed order.
class RowAccumulator {
 public:
  using Entry = std::pair<int, Scalar>;    // (column, value), sorted
  using SparseRow = std::vector<Entry>;

  explicit RowAccumulator(int cols) : cols_(cols) {}

  void add(SparseRow row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  /// Canonical kernel basis, same convention as kernel_basis().
  std::vector<Vec> kernel();

 private:
  void reduce_fully();
  int cols_;
  std::map<int, size_t> pivot_;
  std::vector<SparseRow> rows_;
  bool reduced_ = true;
};

}  // namespace superq
