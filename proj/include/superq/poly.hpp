#pragma once

#include <superq/rational.hpp>

#include <optional>
#include <vector>

namespace superq {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial is the empty vector; otherwise the leading entry is
/// nonzero.
using Poly = std::vector<Rat>;

void poly_trim(Poly& p);
int poly_deg(const Poly& p);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& p);
Poly poly_monic(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);

/// Euclidean division; returns quotient, sets rem.
Poly poly_divmod(const Poly& a, const Poly& b, Poly& rem);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic
Poly poly_derivative(const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);

bool poly_is_squarefree(const Poly& p);

/// All rational roots of p (exact, via the rational root theorem on the
/// primitive integer model), each listed once.
std::vector<Rat> poly_rational_roots(const Poly& p);

/// Divides out (x - r) as many times as it occurs.
Poly poly_remove_root(const Poly& p, const Rat& r);

/// Exact irreducibility over Q for nonconstant p. Degree <= 3 is settled by
/// the rational root test; higher degrees first look for an irreducibility
/// certificate modulo small primes and fall back to an exhaustive Kronecker
/// factor search, so the answer is always exact.
bool poly_is_irreducible_over_Q(const Poly& p);

std::string poly_to_string(const Poly& p, const std::string& var = "t");

}  // namespace superq
