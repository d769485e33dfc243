#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superq {

/// Exact rational numbers. GMP keeps values canonical (reduced, positive
/// denominator), which every serialization below relies on.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// True iff q is the square of a rational; if so *root is the nonnegative root.
inline bool rat_is_square(const Rat& q, Rat* root = nullptr) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *root = Rat(rn, rd);
  }
  return true;
}

}  // namespace superq
