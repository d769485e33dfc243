#include <superq/linalg.hpp>

#include <algorithm>

namespace superq {

int spoly_deg(const SPoly& p) { return static_cast<int>(p.size()) - 1; }

void spoly_trim(SPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly spoly_monic(const SPoly& p) {
  if (p.empty()) return p;
  SPoly q = p;
  Scalar inv = q.back().inverse();
  for (auto& c : q) c *= inv;
  return q;
}

SPoly spoly_mul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  spoly_trim(r);
  return r;
}

SPoly spoly_divmod(const SPoly& a, const SPoly& b, SPoly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  spoly_trim(rem);
  if (rem.size() < b.size()) return {};
  SPoly q(rem.size() - b.size() + 1, Scalar(0));
  Scalar lead_inv = b.back().inverse();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    size_t top = k + b.size() - 1;
    if (top >= rem.size() || rem[top].is_zero()) continue;
    Scalar f = rem[top] * lead_inv;
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
  }
  spoly_trim(rem);
  spoly_trim(q);
  return q;
}

SPoly spoly_gcd(const SPoly& a, const SPoly& b) {
  SPoly x = a, y = b;
  spoly_trim(x);
  spoly_trim(y);
  while (!y.empty()) {
    SPoly rem;
    spoly_divmod(x, y, rem);
    x = std::move(y);
    y = std::move(rem);
  }
  return spoly_monic(x);
}

SPoly spoly_derivative(const SPoly& p) {
  if (p.size() <= 1) return {};
  SPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Scalar(static_cast<long>(i));
  spoly_trim(r);
  return r;
}

Scalar spoly_eval(const SPoly& p, const Scalar& x) {
  Scalar r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

bool spoly_is_rational(const SPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& c) { return c.is_rational(); });
}

Poly spoly_to_rational(const SPoly& p) {
  Poly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i].rational();
  return r;
}

std::string spoly_to_string(const SPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = spoly_deg(p); i >= 0; --i) {
    if (p[i].is_zero()) continue;
    std::string coeff = p[i].str();
    std::string term;
    if (i == 0)
      term = coeff;
    else {
      if (coeff != "1") term = "(" + coeff + ")*";
      term += "t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::optional<Scalar> scalar_sqrt(const Scalar& s) {
  if (s.is_zero()) return Scalar(0);
  if (s.is_rational()) {
    Rat root;
    if (rat_is_square(s.rational(), &root)) return Scalar(root);
    if (!s.field()) return std::nullopt;
  }
  const FieldPtr& f = s.field();
  if (!f) return std::nullopt;
  if (f->degree() == 2 && f->minpoly()[1] == 0) {
    // Q(sqrt(d)): (a + b t)^2 = a^2 + b^2 d + 2ab t
    Rat d = -f->minpoly()[0];
    Rat s0 = s.coeffs()[0], s1 = s.coeffs()[1];
    if (s1 == 0) {
      Rat root;
      if (rat_is_square(s0, &root)) return Scalar(root);
      if (s0 != 0 && rat_is_square(s0 / d, &root))
        return Scalar(f, {Rat(0), root});
      return std::nullopt;
    }
    // a,b both nonzero: a^2 + d b^2 = s0, 2 a b = s1 => 4 a^4 - 4 s0 a^2 + d s1^2 = 0
    Rat disc = s0 * s0 - d * s1 * s1, droot;
    if (!rat_is_square(disc, &droot)) return std::nullopt;
    for (const Rat& a2 : {(s0 + droot) / 2, (s0 - droot) / 2}) {
      Rat a;
      if (rat_is_square(a2, &a) && a != 0) return Scalar(f, {a, s1 / (2 * a)});
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Scalar> spoly_roots_in_field(const SPoly& p, bool need_all) {
  SPoly f = spoly_monic(p);
  std::vector<Scalar> roots;
  if (spoly_is_rational(f)) {
    Poly q = spoly_to_rational(f);
    for (const Rat& r : poly_rational_roots(q)) {
      roots.emplace_back(r);
      q = poly_remove_root(q, r);
    }
    // a remaining quadratic factor may still split over a quadratic session field
    while (poly_deg(q) == 2) {
      Rat disc = q[1] * q[1] - 4 * q[2] * q[0];
      auto root = scalar_sqrt(Scalar(disc));
      if (!root) break;
      Scalar r1 = (Scalar(-q[1]) + *root) / Scalar(q[2] * 2);
      Scalar r2 = (Scalar(-q[1]) - *root) / Scalar(q[2] * 2);
      roots.push_back(r1);
      if (!(r1 == r2)) roots.push_back(r2);
      q = {};
    }
    if (!poly_is_zero(q) && poly_deg(q) >= 2 && need_all)
      throw ExtensionNeeded("polynomial does not split over the session field: " + poly_to_string(q), poly_monic(q));
    return roots;
  }
  // number-field coefficients: peel quadratics, else give up honestly
  SPoly g = f;
  if (spoly_deg(g) == 1) {
    roots.push_back(-g[0]);
    return roots;
  }
  if (spoly_deg(g) == 2) {
    Scalar disc = g[1] * g[1] - Scalar(4) * g[0];
    auto root = scalar_sqrt(disc);
    if (root) {
      roots.push_back((-g[1] + *root) / Scalar(2));
      Scalar r2 = (-g[1] - *root) / Scalar(2);
      if (!(roots[0] == r2)) roots.push_back(r2);
      return roots;
    }
  }
  if (need_all)
    throw ExtensionNeeded("polynomial with irrational coefficients does not split: " + spoly_to_string(g),
                          Poly{});
  return roots;
}

namespace {

// Fraction-free Bareiss forward elimination; returns row-permuted upper form
// together with pivot bookkeeping. Final normalization to RREF happens in
// rref() so all public outputs are canonical.
struct Forward {
  Mat m;
  std::vector<Index> pivot_cols;
  std::vector<Index> pivot_rows;
};

Forward bareiss_forward(Mat m) {
  const Index rows = m.rows(), cols = m.cols();
  Forward fw;
  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const Scalar pivot = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = (m(i, j) * pivot - f * m(r, j)) / prev;
    }
    prev = pivot;
    fw.pivot_cols.push_back(c);
    fw.pivot_rows.push_back(r);
    ++r;
  }
  fw.m = std::move(m);
  return fw;
}

}  // namespace

Rref rref(const Mat& m) {
  Forward fw = bareiss_forward(m);
  const Index rk = static_cast<Index>(fw.pivot_cols.size());
  const Index cols = m.cols();
  Mat r = zero_mat(rk, cols);
  for (Index i = 0; i < rk; ++i) {
    Scalar inv = fw.m(i, fw.pivot_cols[i]).inverse();
    for (Index j = fw.pivot_cols[i]; j < cols; ++j) r(i, j) = fw.m(i, j) * inv;
  }
  for (Index i = rk - 1; i >= 0; --i)
    for (Index k = 0; k < i; ++k) {
      const Scalar f = r(k, fw.pivot_cols[i]);
      if (f.is_zero()) continue;
      for (Index j = fw.pivot_cols[i]; j < cols; ++j) r(k, j) -= f * r(i, j);
    }
  Rref out;
  out.r = std::move(r);
  out.pivots = std::move(fw.pivot_cols);
  return out;
}

Index rank(const Mat& m) { return static_cast<Index>(bareiss_forward(m).pivot_cols.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(cols);
    v(f) = Scalar(1);
    for (Index i = 0; i < rr.rank(); ++i) v(rr.pivots[i]) = -rr.r(i, f);
    for (Index i = 0; i < cols; ++i)
      if (!v(i).is_zero()) {
        Scalar inv = v(i).inverse();
        for (Index j = i; j < cols; ++j) v(j) *= inv;
        break;
      }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw ValidationError("solve_linear: dimension mismatch");
  Mat aug = zero_mat(m.rows(), m.cols() + 1);
  aug.block(0, 0, m.rows(), m.cols()) = m;
  aug.col(m.cols()) = rhs;
  Rref rr = rref(aug);
  for (Index c : rr.pivots)
    if (c == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (Index i = 0; i < rr.rank(); ++i) x(rr.pivots[i]) = rr.r(i, m.cols());
  return x;
}

std::pair<SPoly, bool> minimal_polynomial(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("minimal_polynomial: matrix not square");
  const Index n = m.rows();
  SpanBuilder span(n * n);
  std::vector<Mat> powers;
  powers.push_back(identity_mat(n));
  auto flatten = [n](const Mat& a) {
    Vec v = zero_vec(n * n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) v(j * n + i) = a(i, j);
    return v;
  };
  Mat cur = powers.back();
  while (true) {
    Vec flat = flatten(cur);
    std::vector<Scalar> coords;
    Vec residue = span.reduce(flat, &coords);
    if (is_zero_vec(residue)) {
      // dependence: cur = sum coords_i * basis_i; express in terms of powers
      // by solving against the stored power flats
      Mat pm = zero_mat(n * n, static_cast<Index>(powers.size()) - 1);
      for (size_t k = 0; k + 1 < powers.size(); ++k) pm.col(static_cast<Index>(k)) = flatten(powers[k]);
      auto sol = solve_linear(pm, flat);
      SPoly p(powers.size(), Scalar(0));
      p.back() = Scalar(1);
      for (Index k = 0; k < pm.cols(); ++k) p[k] = -(*sol)(k);
      bool squarefree = spoly_deg(spoly_gcd(p, spoly_derivative(p))) == 0;
      return {p, squarefree};
    }
    span.insert(flat);
    cur = m * cur;
    powers.push_back(cur);
  }
}

Mat mat_from_columns(const std::vector<Vec>& cols, Index rows) {
  Mat m = zero_mat(rows, static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
  return m;
}

Mat mat_from_rows(const std::vector<Vec>& rows, Index cols) {
  Mat m = zero_mat(static_cast<Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

Vec SpanBuilder::reduce(const Vec& v, std::vector<Scalar>* coords) const {
  if (coords) coords->assign(rows_.size(), Scalar(0));
  Vec r = v;
  for (const auto& [col, idx] : pivot_) {
    const Scalar f = r(col);
    if (f.is_zero()) continue;
    if (coords) (*coords)[idx] = f;
    r -= f * rows_[idx];
  }
  return r;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool SpanBuilder::insert(const Vec& v) {
  Vec r = reduce(v);
  Index lead = -1;
  for (Index i = 0; i < r.size(); ++i)
    if (!r(i).is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  Scalar inv = r(lead).inverse();
  for (Index i = lead; i < r.size(); ++i) r(i) *= inv;
  // clear the new pivot from existing rows to stay fully reduced
  for (auto& row : rows_) {
    const Scalar f = row(lead);
    if (!f.is_zero()) row -= f * r;
  }
  pivot_[lead] = rows_.size();
  rows_.push_back(std::move(r));
  // keep rows sorted by pivot column for canonical output
  std::vector<Vec> sorted;
  sorted.reserve(rows_.size());
  size_t k = 0;
  for (auto& [col, idx] : pivot_) {
    sorted.push_back(std::move(rows_[idx]));
    idx = k++;
  }
  rows_ = std::move(sorted);
  return true;
}

std::vector<Index> SpanBuilder::pivot_columns() const {
  std::vector<Index> out;
  out.reserve(pivot_.size());
  for (const auto& [col, idx] : pivot_) out.push_back(col);
  return out;
}

void RowAccumulator::add(SparseRow row) {
  while (!row.empty()) {
    auto it = pivot_.find(row.front().first);
    if (it == pivot_.end()) break;
    // row -= lead * pivot_row   (both sorted sparse merges)
    const SparseRow& p = rows_[it->second];
    const Scalar f = row.front().second;
    SparseRow merged;
    merged.reserve(row.size() + p.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < p.size()) {
      if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
        merged.push_back(std::move(row[a++]));
      } else if (a == row.size() || p[b].first < row[a].first) {
        merged.emplace_back(p[b].first, -(f * p[b].second));
        ++b;
      } else {
        Scalar v = row[a].second - f * p[b].second;
        if (!v.is_zero()) merged.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  if (row.empty()) return;
  const Scalar inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  pivot_[row.front().first] = rows_.size();
  rows_.push_back(std::move(row));
  reduced_ = false;
}

void RowAccumulator::reduce_fully() {
  if (reduced_) return;
  // eliminate every pivot from every other row, bottom pivot first
  for (auto it = pivot_.rbegin(); it != pivot_.rend(); ++it) {
    const int pc = it->first;
    const SparseRow& p = rows_[it->second];
    for (auto& [col, idx] : pivot_) {
      if (col >= pc) continue;
      SparseRow& r = rows_[idx];
      auto hit = std::lower_bound(r.begin(), r.end(), pc,
                                  [](const Entry& e, int c) { return e.first < c; });
      if (hit == r.end() || hit->first != pc) continue;
      const Scalar f = hit->second;
      SparseRow merged;
      merged.reserve(r.size() + p.size());
      size_t a = 0, b = 0;
      while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
          merged.push_back(std::move(r[a++]));
        } else if (a == r.size() || p[b].first < r[a].first) {
          merged.emplace_back(p[b].first, -(f * p[b].second));
          ++b;
        } else {
          Scalar v = r[a].second - f * p[b].second;
          if (!v.is_zero()) merged.emplace_back(r[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      r = std::move(merged);
    }
  }
  reduced_ = true;
}

std::vector<Vec> RowAccumulator::kernel() {
  reduce_fully();
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [c, idx] : pivot_) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(cols_);
    v(f) = Scalar(1);
    for (const auto& [c, idx] : pivot_) {
      const SparseRow& row = rows_[idx];
      auto hit = std::lower_bound(row.begin(), row.end(), f,
                                  [](const Entry& e, int col) { return e.first < col; });
      if (hit != row.end() && hit->first == f) v(c) = -hit->second;
    }
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) {
        Scalar inv = v(i).inverse();
        for (Index j = i; j < v.size(); ++j) v(j) *= inv;
        break;
      }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace superq
