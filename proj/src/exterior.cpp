#include "exc/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace exc {

ExteriorVector ExteriorVector::basis(int dim, const Subset& indices) {
  validate_subset(indices, dim);
  ExteriorVector v(static_cast<int>(indices.size()), dim);
  v.coeffs_.emplace(indices, Rational(1));
  return v;
}

ExteriorVector ExteriorVector::from_vector(const RatVec& v) {
  ExteriorVector u(1, static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) u.coeffs_.emplace(Subset{static_cast<int>(i) + 1}, v[i]);
  return u;
}

Rational ExteriorVector::coeff(const Subset& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ExteriorVector::add_term(const Subset& s, const Rational& c) {
  if (static_cast<int>(s.size()) != degree_) throw std::domain_error("ExteriorVector: wrong index length");
  validate_subset(s, dim_);
  if (c == 0) return;
  auto it = coeffs_.find(s);
  if (it == coeffs_.end()) {
    coeffs_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

ExteriorVector ExteriorVector::operator+(const ExteriorVector& o) const {
  if (degree_ != o.degree_ || dim_ != o.dim_) throw std::domain_error("ExteriorVector: shape mismatch in sum");
  ExteriorVector r = *this;
  for (const auto& [s, c] : o.coeffs_) r.add_term(s, c);
  return r;
}

ExteriorVector ExteriorVector::operator-(const ExteriorVector& o) const {
  if (degree_ != o.degree_ || dim_ != o.dim_) throw std::domain_error("ExteriorVector: shape mismatch in difference");
  ExteriorVector r = *this;
  for (const auto& [s, c] : o.coeffs_) r.add_term(s, -c);
  return r;
}

ExteriorVector ExteriorVector::operator*(const Rational& s) const {
  ExteriorVector r(degree_, dim_);
  if (s == 0) return r;
  for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, c * s);
  return r;
}

RatVec ExteriorVector::dense() const {
  auto idx = k_subsets(dim_, degree_);
  RatVec v(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) v[i] = coeff(idx[i]);
  return v;
}

ExteriorVector ExteriorVector::from_dense(int degree, int dim, const RatVec& v) {
  auto idx = k_subsets(dim, degree);
  if (v.size() != idx.size()) throw std::domain_error("ExteriorVector: dense length mismatch");
  ExteriorVector u(degree, dim);
  for (size_t i = 0; i < idx.size(); ++i)
    if (v[i] != 0) u.coeffs_.emplace(idx[i], v[i]);
  return u;
}

ExteriorVector wedge(const ExteriorVector& u, const ExteriorVector& v) {
  if (u.dim() != v.dim()) throw std::domain_error("wedge: ambient dimension mismatch");
  if (u.degree() + v.degree() > u.dim()) throw std::domain_error("wedge: degree overflow");
  ExteriorVector r(u.degree() + v.degree(), u.dim());
  for (const auto& [a, ca] : u.coeffs())
    for (const auto& [b, cb] : v.coeffs()) {
      if (!subsets_disjoint(a, b)) continue;
      r.add_term(subset_union_sorted(a, b), ca * cb * shuffle_sign(a, b));
    }
  return r;
}

Rational top_pair(const ExteriorVector& u, const ExteriorVector& v) {
  if (u.dim() != v.dim()) throw std::domain_error("top_pair: ambient dimension mismatch");
  if (u.degree() + v.degree() != u.dim()) throw std::domain_error("top_pair: degrees must sum to the dimension");
  Rational total = 0;
  for (const auto& [a, ca] : u.coeffs()) {
    Subset comp = subset_complement(a, u.dim());
    Rational cb = v.coeff(comp);
    if (cb != 0) total += ca * cb * shuffle_sign(a, comp);
  }
  return total;
}

ExteriorVector hodge_star(const ExteriorVector& u) {
  ExteriorVector r(u.dim() - u.degree(), u.dim());
  for (const auto& [s, c] : u.coeffs()) {
    Subset comp = subset_complement(s, u.dim());
    r.add_term(comp, c * shuffle_sign(s, comp));
  }
  return r;
}

std::optional<std::vector<RatVec>> decompose(const ExteriorVector& h) {
  if (h.is_zero()) throw std::domain_error("decompose: zero input");
  const int d = h.dim();
  const int m = h.degree();
  if (m == d) {
    // Top form: always decomposable, e.g. c*e_1, e_2, ..., e_d.
    std::vector<RatVec> factors(d, RatVec(d, Rational(0)));
    Subset top(d);
    for (int i = 0; i < d; ++i) top[i] = i + 1;
    for (int i = 0; i < d; ++i) factors[i][i] = 1;
    factors[0][0] = h.coeff(top);
    return factors;
  }
  // Kernel of v -> v wedge h.
  auto rows_idx = k_subsets(d, m + 1);
  RatMatrix a(static_cast<int>(rows_idx.size()), d);
  for (int j = 0; j < d; ++j) {
    ExteriorVector w = wedge(ExteriorVector::basis(d, Subset{j + 1}), h);
    for (size_t r = 0; r < rows_idx.size(); ++r) a.at(static_cast<int>(r), j) = w.coeff(rows_idx[r]);
  }
  RatMatrix ker = kernel_basis(a);
  if (ker.rows() != m) return std::nullopt;
  std::vector<RatVec> factors(m);
  for (int i = 0; i < m; ++i) factors[i] = ker.row(i);
  // Rescale the first factor so the wedge of the factors equals h exactly.
  ExteriorVector w = wedge_all(factors, d);
  const auto& [s0, c0] = *h.coeffs().begin();
  Rational wc = w.coeff(s0);
  if (wc == 0) return std::nullopt;
  Rational scale = c0 / wc;
  for (auto& x : factors[0]) x *= scale;
  if (!(wedge_all(factors, d) == h)) return std::nullopt;
  return factors;
}

ExteriorVector wedge_all(const std::vector<RatVec>& vecs, int dim) {
  ExteriorVector acc = ExteriorVector::basis(dim, Subset{});
  for (const auto& v : vecs) acc = wedge(acc, ExteriorVector::from_vector(v));
  return acc;
}

namespace {

Rational stacked_det(const std::vector<RatVec>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::domain_error("stacked_det: not square");
    for (size_t c = 0; c < rows.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  }
  return det(m);
}

ExteriorVector meet_expand_first(const std::vector<RatVec>& fa, const std::vector<RatVec>& fb, int d) {
  const int r = static_cast<int>(fa.size());
  const int s = static_cast<int>(fb.size());
  const int t = r + s - d;
  ExteriorVector acc(t, d);
  for (const Subset& I : k_subsets(r, t)) {
    Subset Ic = subset_complement(I, r);
    std::vector<RatVec> stacked;
    stacked.reserve(d);
    for (int p : Ic) stacked.push_back(fa[p - 1]);
    for (const auto& v : fb) stacked.push_back(v);
    Rational bracket = stacked_det(stacked);
    if (bracket == 0) continue;
    std::vector<RatVec> kept;
    kept.reserve(t);
    for (int p : I) kept.push_back(fa[p - 1]);
    // Complement-first shuffle sign; with the kept-last sign the two
    // expansions differ by (-1)^(t(r-t)) and only agree for r-t even.
    acc = acc + wedge_all(kept, d) * (bracket * shuffle_sign(Ic, I));
  }
  return acc;
}

}  // namespace

ExteriorVector meet(const ExteriorVector& a, const ExteriorVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("meet: ambient dimension mismatch");
  if (a.degree() + b.degree() < a.dim()) throw std::domain_error("meet: degrees sum below the dimension");
  auto fa = decompose(a);
  auto fb = decompose(b);
  if (!fa || !fb) throw std::domain_error("meet: non-decomposable input");
  return meet_expand_first(*fa, *fb, a.dim());
}

ExteriorVector meet_second_expansion(const ExteriorVector& a, const ExteriorVector& b) {
  if (a.dim() != b.dim()) throw std::domain_error("meet: ambient dimension mismatch");
  if (a.degree() + b.degree() < a.dim()) throw std::domain_error("meet: degrees sum below the dimension");
  auto fa = decompose(a);
  auto fb = decompose(b);
  if (!fa || !fb) throw std::domain_error("meet: non-decomposable input");
  const int d = a.dim();
  const int r = static_cast<int>(fa->size());
  const int s = static_cast<int>(fb->size());
  const int t = r + s - d;
  ExteriorVector acc(t, d);
  for (const Subset& J : k_subsets(s, t)) {
    Subset Jc = subset_complement(J, s);
    std::vector<RatVec> stacked;
    stacked.reserve(d);
    for (const auto& v : *fa) stacked.push_back(v);
    for (int p : Jc) stacked.push_back((*fb)[p - 1]);
    Rational bracket = stacked_det(stacked);
    if (bracket == 0) continue;
    std::vector<RatVec> kept;
    kept.reserve(t);
    for (int p : J) kept.push_back((*fb)[p - 1]);
    acc = acc + wedge_all(kept, d) * (bracket * shuffle_sign(J, Jc));
  }
  return acc;
}

ExteriorVector functional_to_exterior(const RatVec& f, int k, int dim) {
  auto idx = k_subsets(dim, k);
  if (f.size() != idx.size()) throw std::domain_error("functional_to_exterior: length mismatch");
  ExteriorVector n(dim - k, dim);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (f[i] == 0) continue;
    Subset comp = subset_complement(idx[i], dim);
    n.add_term(comp, f[i] * shuffle_sign(idx[i], comp));
  }
  return n;
}

}  // namespace exc
