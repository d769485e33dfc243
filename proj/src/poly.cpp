#include <superq/poly.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace superq {

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  Poly q = p;
  Rat lead = q.back();
  for (auto& c : q) c /= lead;
  return q;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Poly poly_divmod(const Poly& a, const Poly& b, Poly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Rat(0));
  const Rat& lead = b.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    size_t top = k + b.size() - 1;
    if (top >= rem.size() || rem[top] == 0) continue;
    Rat f = rem[top] / lead;
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
  }
  poly_trim(rem);
  poly_trim(q);
  return q;
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly rem;
  poly_divmod(a, b, rem);
  return rem;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  poly_trim(x);
  poly_trim(y);
  while (!y.empty()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
  poly_trim(r);
  return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

bool poly_is_squarefree(const Poly& p) {
  if (poly_deg(p) <= 1) return true;
  return poly_deg(poly_gcd(p, poly_derivative(p))) == 0;
}

namespace {

// Primitive integer model: c * p with integer coprime coefficients.
std::vector<mpz_class> primitive_integer_model(const Poly& p) {
  mpz_class den(1);
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z(p.size());
  mpz_class g(0);
  for (size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(den);
    z[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& c : z) c /= g;
  return z;
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- arithmetic in F_p[x] with small p, used only for the quick certificate ---

using ModPoly = std::vector<uint64_t>;

void mp_trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // reduce mod m (m monic)
  for (int k = static_cast<int>(r.size()) - 1; k >= static_cast<int>(m.size()) - 1; --k) {
    uint64_t c = r[k];
    if (!c) continue;
    r[k] = 0;
    for (size_t i = 0; i + 1 < m.size(); ++i) {
      size_t pos = k - (m.size() - 1) + i;
      r[pos] = (r[pos] + (p - m[i] % p) * c) % p;
    }
  }
  mp_trim(r);
  return r;
}

ModPoly mp_powmod(ModPoly base, mpz_class e, const ModPoly& m, uint64_t p) {
  ModPoly r{1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mp_mulmod(r, base, m, p);
    base = mp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
  auto inv = [p](uint64_t x) {
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    uint64_t lead = inv(b.back());
    // a mod b
    for (int k = static_cast<int>(a.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
      uint64_t c = a[k] * lead % p;
      if (!c) continue;
      for (size_t i = 0; i < b.size(); ++i) {
        size_t pos = k - (b.size() - 1) + i;
        a[pos] = (a[pos] + (p - b[i]) * c) % p;
      }
    }
    mp_trim(a);
    std::swap(a, b);
  }
  return a;
}

// True iff f is irreducible mod p; requires deg preserved and f squarefree mod p.
bool irreducible_mod_p(const std::vector<mpz_class>& f, uint64_t p) {
  ModPoly m(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_class c = f[i] % static_cast<long>(p);
    if (c < 0) c += static_cast<long>(p);
    m[i] = c.get_ui();
  }
  if (m.back() == 0) return false;  // degree dropped
  // make monic
  {
    uint64_t lead = m.back(), inv = 1, e = p - 2, base = lead;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& c : m) c = c * inv % p;
  }
  int n = static_cast<int>(m.size()) - 1;
  // x^(p^n) == x mod m, and gcd(x^(p^(n/q)) - x, m) == 1 for prime q | n
  ModPoly x{0, 1};
  mpz_class pz(static_cast<long>(p));
  mpz_class pn;
  mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), n);
  ModPoly xq = mp_powmod(x, pn, m, p);
  ModPoly diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  mp_trim(diff);
  if (!diff.empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool q_prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) q_prime = false;
    if (!q_prime) continue;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), n / q);
    ModPoly xk = mp_powmod(x, pk, m, p);
    ModPoly d = xk;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    mp_trim(d);
    ModPoly g = mp_gcd(d, m, p);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  return true;
}

// Exhaustive Kronecker search for a nonconstant factor of degree <= deg/2 of a
// primitive squarefree integer polynomial with no rational roots. Exact but
// exponential in the divisor counts; fine at the degrees this project meets.
bool kronecker_has_factor(const std::vector<mpz_class>& f) {
  int n = static_cast<int>(f.size()) - 1;
  Poly fq(f.size());
  for (size_t i = 0; i < f.size(); ++i) fq[i] = Rat(f[i]);
  for (int k = 2; k <= n / 2; ++k) {
    // candidate factor g of degree k, determined by values at 0..k
    std::vector<std::vector<mpz_class>> choices(k + 1);
    bool impossible = false;
    for (int t = 0; t <= k; ++t) {
      Rat v = poly_eval(fq, Rat(t));
      if (v == 0) { impossible = true; break; }  // roots already removed
      auto divs = divisors_of(v.get_num());
      for (auto d : std::vector<mpz_class>(divs)) choices[t].push_back(-d);
      for (auto& d : divs) choices[t].push_back(d);
    }
    if (impossible) continue;
    std::vector<size_t> idx(k + 1, 0);
    while (true) {
      // Lagrange-interpolate candidate values, test integrality and division
      std::vector<Rat> vals(k + 1);
      for (int t = 0; t <= k; ++t) vals[t] = Rat(choices[t][idx[t]]);
      Poly g{Rat(0)};
      for (int t = 0; t <= k; ++t) {
        Poly basis{Rat(1)};
        Rat denom(1);
        for (int s = 0; s <= k; ++s) {
          if (s == t) continue;
          basis = poly_mul(basis, Poly{Rat(-s), Rat(1)});
          denom *= Rat(t - s);
        }
        g = poly_add(g, poly_scale(basis, vals[t] / denom));
      }
      if (poly_deg(g) == k) {
        bool integral = std::all_of(g.begin(), g.end(), [](const Rat& c) { return rat_is_integer(c); });
        if (integral) {
          Poly rem;
          poly_divmod(fq, g, rem);
          if (poly_is_zero(rem)) return true;
        }
      }
      int pos = 0;
      while (pos <= k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos > k) break;
    }
  }
  return false;
}

}  // namespace

std::vector<Rat> poly_rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (poly_deg(p) < 1) return roots;
  auto z = primitive_integer_model(p);
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  std::vector<mpz_class> zz(z.begin() + low, z.end());
  Poly pq(zz.size());
  for (size_t i = 0; i < zz.size(); ++i) pq[i] = Rat(zz[i]);
  if (poly_deg(pq) >= 1) {
    auto nums = divisors_of(zz.front());
    auto dens = divisors_of(zz.back());
    for (const auto& a : nums)
      for (const auto& b : dens) {
        Rat cand(a, b);
        cand.canonicalize();
        if (poly_eval(pq, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
        Rat neg = -cand;
        if (poly_eval(pq, neg) == 0 && std::find(roots.begin(), roots.end(), neg) == roots.end())
          roots.push_back(neg);
      }
  }
  std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return a < b; });
  return roots;
}

Poly poly_remove_root(const Poly& p, const Rat& r) {
  Poly q = p, lin{-r, Rat(1)};
  while (poly_deg(q) >= 1 && poly_eval(q, r) == 0) {
    Poly rem;
    q = poly_divmod(q, lin, rem);
  }
  return q;
}

bool poly_is_irreducible_over_Q(const Poly& p) {
  int n = poly_deg(p);
  if (n < 1) return false;
  if (n == 1) return true;
  if (!poly_is_squarefree(p)) return false;
  if (!poly_rational_roots(p).empty()) return false;
  if (n <= 3) return true;  // no root and degree <= 3
  auto z = primitive_integer_model(p);
  static const uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (uint64_t q : primes) {
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), q)) continue;
    // only trust the certificate when f stays squarefree mod q
    Poly fq(z.size());
    for (size_t i = 0; i < z.size(); ++i) fq[i] = Rat(z[i]);
    if (irreducible_mod_p(z, q)) return true;
  }
  return !kronecker_has_factor(z);
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = poly_deg(p); i >= 0; --i) {
    if (p[i] == 0) continue;
    std::string term;
    if (i == 0)
      term = rat_to_string(p[i]);
    else {
      if (p[i] == -1)
        term = "-";
      else if (p[i] != 1)
        term = rat_to_string(p[i]) + "*";
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace superq
