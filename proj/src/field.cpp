#include <superq/error.hpp>
#include <superq/field.hpp>

#include <sstream>

namespace superq {

NumberField::NumberField(Poly monic) : minpoly_(std::move(monic)) {
  int d = degree();
  red_.resize(d > 1 ? d - 1 : 0);
  // t^d = -(c_0 + c_1 t + ... + c_{d-1} t^{d-1}); higher powers by recursion
  if (d > 1) {
    std::vector<Rat> cur(d);
    for (int i = 0; i < d; ++i) cur[i] = -minpoly_[i];
    red_[0] = cur;
    for (int k = 1; k < d - 1; ++k) {
      std::vector<Rat> nxt(d, Rat(0));
      for (int i = 0; i < d - 1; ++i) nxt[i + 1] = cur[i];
      if (cur[d - 1] != 0)
        for (int i = 0; i < d; ++i) nxt[i] += cur[d - 1] * red_[0][i];
      red_[k] = nxt;
      cur = std::move(nxt);
    }
  }
}

FieldPtr NumberField::make(const Poly& monic) {
  Poly m = monic;
  poly_trim(m);
  if (poly_deg(m) < 1) throw ValidationError("number field minimal polynomial must be nonconstant");
  if (m.back() != 1) throw ValidationError("number field minimal polynomial must be monic");
  if (poly_deg(m) > 1 && !poly_is_irreducible_over_Q(m))
    throw ValidationError("number field minimal polynomial is reducible over Q: " + poly_to_string(m));
  return FieldPtr(new NumberField(std::move(m)));
}

FieldPtr NumberField::quadratic(const Rat& d) {
  return make(Poly{-d, Rat(0), Rat(1)});
}

bool NumberField::same_as(const NumberField& other) const {
  return this == &other || minpoly_ == other.minpoly_;
}

Scalar::Scalar(FieldPtr f, std::vector<Rat> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_ || field_->degree() == 1) {
    Rat v = c_.empty() ? Rat(0) : c_[0];
    field_.reset();
    c_.assign(1, v);
    return;
  }
  c_.resize(field_->degree(), Rat(0));
}

Scalar Scalar::generator(const FieldPtr& f) {
  if (!f || f->degree() == 1) throw ValidationError("generator of a degree-1 field is rational");
  std::vector<Rat> c(f->degree(), Rat(0));
  c[1] = 1;
  return Scalar(f, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Scalar::rational() const {
  if (!is_rational()) throw ValidationError("scalar " + str() + " is not rational");
  return c_[0];
}

void Scalar::align_with(const Scalar& o) {
  if (field_ == o.field_) {
    return;
  }
  if (!o.field_) return;  // o is rational, embeds into our field
  if (!field_) {
    Rat v = c_[0];
    field_ = o.field_;
    c_.assign(field_->degree(), Rat(0));
    c_[0] = v;
    return;
  }
  if (!field_->same_as(*o.field_))
    throw ValidationError("scalars from distinct number fields: " + poly_to_string(field_->minpoly()) +
                          " vs " + poly_to_string(o.field_->minpoly()));
}

void Scalar::reduce() {
  if (!field_) return;
  int d = field_->degree();
  if (static_cast<int>(c_.size()) <= d) return;
  const auto& red = field_->reduction_rows();
  for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
    if (c_[k] == 0) continue;
    const auto& row = red[k - d];
    for (int i = 0; i < d; ++i) c_[i] += c_[k] * row[i];
    c_[k] = 0;
  }
  c_.resize(d);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  align_with(o);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  align_with(o);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  align_with(o);
  if (!field_) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational() && !o.field_) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  const std::vector<Rat>& b = o.c_;
  std::vector<Rat> prod(c_.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += c_[i] * b[j];
  }
  c_ = std::move(prod);
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar division by zero");
  if (!field_) {
    Scalar r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // extended Euclid in Q[t] against the (irreducible) minimal polynomial
  Poly a(c_.begin(), c_.end());
  poly_trim(a);
  Poly r0 = field_->minpoly(), r1 = a;
  Poly s0{}, s1{Rat(1)};
  while (poly_deg(r1) > 0) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant (minpoly irreducible, a nonzero)
  Poly inv = poly_scale(s1, 1 / r1[0]);
  inv.resize(field_->degree(), Rat(0));
  return Scalar(field_, std::vector<Rat>(inv.begin(), inv.end()));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar t = o;
  t.align_with(*this);
  align_with(t);
  return *this *= t.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar d = a;
  d -= b;
  return d.is_zero();
}

std::string Scalar::str() const {
  if (!field_) return rat_to_string(c_[0]);
  Poly p(c_.begin(), c_.end());
  poly_trim(p);
  return poly_to_string(p);
}

}  // namespace superq
