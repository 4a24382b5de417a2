#include "exc/polycone.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "exc/subsets.hpp"

namespace exc {

bool intvec_less(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Pairing Pairing::identity(int dim) { return Pairing(dim, true); }

Pairing Pairing::top_wedge(int d, int k) {
  auto point_idx = k_subsets(d, k);
  auto normal_idx = k_subsets(d, d - k);
  Pairing p(static_cast<int>(point_idx.size()), false);
  if (point_idx.size() != normal_idx.size()) throw std::logic_error("top_wedge: binomial mismatch");
  // pair(n, x) = top_pair(x, n): P[J][I] = eps(I, I^c) [J == I^c]
  p.mat_.assign(point_idx.size(), IntVec(point_idx.size(), Int(0)));
  std::map<Subset, int> normal_pos;
  for (size_t j = 0; j < normal_idx.size(); ++j) normal_pos[normal_idx[j]] = static_cast<int>(j);
  for (size_t i = 0; i < point_idx.size(); ++i) {
    Subset comp = subset_complement(point_idx[i], d);
    p.mat_[normal_pos[comp]][i] = shuffle_sign(point_idx[i], comp);
  }
  return p;
}

Int Pairing::pair(const IntVec& normal, const IntVec& point) const {
  if (identity_) return dot(normal, point);
  Int s = 0;
  for (int j = 0; j < dim_; ++j) {
    if (normal[j] == 0) continue;
    for (int i = 0; i < dim_; ++i)
      if (mat_[j][i] != 0) s += normal[j] * mat_[j][i] * point[i];
  }
  return s;
}

Rational Pairing::pair(const IntVec& normal, const RatVec& point) const {
  Rational s = 0;
  if (identity_) {
    for (int i = 0; i < dim_; ++i) s += Rational(normal[i]) * point[i];
    return s;
  }
  for (int j = 0; j < dim_; ++j) {
    if (normal[j] == 0) continue;
    for (int i = 0; i < dim_; ++i)
      if (mat_[j][i] != 0) s += Rational(normal[j] * mat_[j][i]) * point[i];
  }
  return s;
}

IntVec Pairing::apply(const IntVec& point) const {
  if (identity_) return point;
  IntVec out(dim_, Int(0));
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i)
      if (mat_[j][i] != 0) out[j] += mat_[j][i] * point[i];
  return out;
}

IntVec Pairing::apply_transpose(const IntVec& normal) const {
  if (identity_) return normal;
  IntVec out(dim_, Int(0));
  for (int j = 0; j < dim_; ++j) {
    if (normal[j] == 0) continue;
    for (int i = 0; i < dim_; ++i)
      if (mat_[j][i] != 0) out[i] += mat_[j][i] * normal[j];
  }
  return out;
}

Pairing Pairing::transposed() const {
  if (identity_) return *this;
  Pairing t(dim_, false);
  t.mat_.assign(dim_, IntVec(dim_, Int(0)));
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) t.mat_[i][j] = mat_[j][i];
  return t;
}

bool Pairing::operator==(const Pairing& o) const {
  return dim_ == o.dim_ && identity_ == o.identity_ && mat_ == o.mat_;
}

namespace {

int rank_of_mask(const std::vector<IntVec>& vecs, const Bitset& mask) {
  std::vector<IntVec> rows;
  for (int i : mask.bits()) rows.push_back(vecs[i]);
  return rank_int(std::move(rows));
}

IntVec kernel_vector_of(const std::vector<IntVec>& rows, int dim) {
  RatMatrix m(static_cast<int>(rows.size()), dim);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < dim; ++c) m.at(static_cast<int>(r), c) = Rational(rows[r][c]);
  RatMatrix k = kernel_basis(m);
  if (k.rows() == 0) return {};
  return primitive_int_vector(k.row(0));
}

// Solve b x = e_j exactly; b is invertible by construction.
RatVec solve_unit(const std::vector<IntVec>& b_rows, int dim, int j) {
  std::vector<RatVec> rows(dim, RatVec(dim + 1, Rational(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) rows[r][c] = Rational(b_rows[r][c]);
    rows[r][dim] = (r == j) ? 1 : 0;
  }
  for (int col = 0; col < dim; ++col) {
    int p = -1;
    for (int r = col; r < dim; ++r)
      if (rows[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) throw std::logic_error("solve_unit: singular basis");
    std::swap(rows[col], rows[p]);
    for (int r = 0; r < dim; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[col][col];
      for (int c = col; c <= dim; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  RatVec x(dim);
  for (int r = 0; r < dim; ++r) x[r] = rows[r][dim] / rows[r][r];
  return x;
}

}  // namespace

std::vector<IntVec> dd_extreme_rays(const std::vector<IntVec>& ineqs, int dim) {
  if (dim <= 0) throw std::domain_error("dd_extreme_rays: nonpositive dimension");
  std::vector<int> basis;
  {
    RankEngine eng(dim);
    for (size_t i = 0; i < ineqs.size() && static_cast<int>(basis.size()) < dim; ++i) {
      RatVec v(dim);
      for (int c = 0; c < dim; ++c) v[c] = Rational(ineqs[i][c]);
      if (eng.push(v)) basis.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(basis.size()) < dim) throw NotPointedError(kernel_vector_of(ineqs, dim));

  // Initial simplicial cone from the basis inequalities: ray j is tight on
  // every basis inequality except the j-th.
  std::vector<IntVec> rays;
  {
    std::vector<IntVec> b_rows;
    for (int i : basis) b_rows.push_back(ineqs[i]);
    for (int j = 0; j < dim; ++j) rays.push_back(primitive_int_vector(solve_unit(b_rows, dim, j)));
  }

  const int total = static_cast<int>(ineqs.size());
  std::vector<int> processed = basis;
  auto recompute_tight = [&](const IntVec& ray) {
    Bitset t(total);
    for (int i : processed)
      if (dot(ineqs[i], ray) == 0) t.set(i);
    return t;
  };
  std::vector<Bitset> tight;
  tight.reserve(rays.size());
  for (const auto& r : rays) tight.push_back(recompute_tight(r));

  std::vector<bool> done(total, false);
  for (int i : basis) done[i] = true;

  for (int t = 0; t < total; ++t) {
    if (done[t]) continue;
    const IntVec& a = ineqs[t];
    std::vector<Int> val(rays.size());
    std::vector<int> pos, neg, zero;
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      int s = sign_of(val[r]);
      if (s > 0)
        pos.push_back(static_cast<int>(r));
      else if (s < 0)
        neg.push_back(static_cast<int>(r));
      else
        zero.push_back(static_cast<int>(r));
    }
    processed.push_back(t);
    if (neg.empty()) {
      for (int r : zero) tight[r].set(t);
      done[t] = true;
      continue;
    }
    std::vector<IntVec> new_rays;
    for (int p : pos)
      for (int q : neg) {
        Bitset common = tight[p] & tight[q];
        if (common.count() < dim - 2) continue;
        // Exact adjacency: the common tight inequalities have rank dim-2.
        if (rank_of_mask(ineqs, common) != dim - 2) continue;
        IntVec nr(dim);
        for (int c = 0; c < dim; ++c) nr[c] = val[p] * rays[q][c] - val[q] * rays[p][c];
        new_rays.push_back(primitive_int_vector(std::move(nr)));
      }
    std::vector<IntVec> kept_rays;
    std::vector<Bitset> kept_tight;
    for (int r : pos) {
      kept_rays.push_back(std::move(rays[r]));
      kept_tight.push_back(std::move(tight[r]));
    }
    for (int r : zero) {
      tight[r].set(t);
      kept_rays.push_back(std::move(rays[r]));
      kept_tight.push_back(std::move(tight[r]));
    }
    for (auto& nr : new_rays) {
      kept_tight.push_back(recompute_tight(nr));
      kept_rays.push_back(std::move(nr));
    }
    rays = std::move(kept_rays);
    tight = std::move(kept_tight);
    done[t] = true;
  }

  std::sort(rays.begin(), rays.end(), intvec_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

void PointedCone::finalize(std::vector<IntVec> rays, std::vector<IntVec> facets) {
  std::sort(rays.begin(), rays.end(), intvec_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::sort(facets.begin(), facets.end(), intvec_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Incidence plus post-hoc validation: all pairings nonnegative, each facet
  // tight on a rank dim-1 set of rays, each stored ray extreme.
  std::vector<Bitset> inc;
  inc.reserve(facets.size());
  for (const auto& f : facets) {
    Bitset b(static_cast<int>(rays.size()));
    for (size_t r = 0; r < rays.size(); ++r) {
      Int v = pairing_.pair(f, rays[r]);
      if (v < 0) throw std::logic_error("PointedCone: ray violates a facet inequality");
      if (v == 0) b.set(static_cast<int>(r));
    }
    inc.push_back(b);
  }
  for (size_t f = 0; f < facets.size(); ++f) {
    if (rank_of_mask(rays, inc[f]) != dim_ - 1)
      throw std::logic_error("PointedCone: facet incidence rank is not dim-1");
  }
  for (size_t r = 0; r < rays.size(); ++r) {
    std::vector<IntVec> active;
    for (size_t f = 0; f < facets.size(); ++f)
      if (inc[f].test(static_cast<int>(r))) active.push_back(facets[f]);
    if (rank_int(std::move(active)) != dim_ - 1) throw std::logic_error("PointedCone: stored ray is not extreme");
  }
  rays_ = std::move(rays);
  facets_ = std::move(facets);
  incidence_ = std::move(inc);
}

PointedCone PointedCone::from_rays(const std::vector<IntVec>& input_rays, Pairing pairing) {
  const int dim = pairing.dim();
  std::vector<IntVec> rays;
  for (const auto& r : input_rays) {
    if (static_cast<int>(r.size()) != dim) throw std::domain_error("from_rays: ray length mismatch");
    if (is_zero_vector(r)) throw std::domain_error("from_rays: zero ray");
    rays.push_back(primitive_int_vector(r));
  }
  std::sort(rays.begin(), rays.end(), intvec_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rank_int(rays) != dim) throw std::domain_error("from_rays: rays do not span; cone is not full-dimensional");

  std::vector<IntVec> funcs;
  funcs.reserve(rays.size());
  for (const auto& r : rays) funcs.push_back(pairing.apply(r));
  std::vector<IntVec> facets = dd_extreme_rays(funcs, dim);
  if (rank_int(facets) != dim) throw NotPointedError(kernel_vector_of(facets, dim));

  // Keep only the extreme input rays.
  std::vector<IntVec> extreme;
  for (const auto& r : rays) {
    std::vector<IntVec> active;
    for (const auto& f : facets)
      if (pairing.pair(f, r) == 0) active.push_back(f);
    if (rank_int(std::move(active)) == dim - 1) extreme.push_back(r);
  }
  PointedCone c(dim, std::move(pairing));
  c.finalize(std::move(extreme), std::move(facets));
  return c;
}

PointedCone PointedCone::from_rays(const std::vector<RatVec>& rays, Pairing pairing) {
  std::vector<IntVec> iv;
  iv.reserve(rays.size());
  for (const auto& r : rays) iv.push_back(primitive_int_vector(r));
  return from_rays(iv, std::move(pairing));
}

PointedCone PointedCone::from_inequalities(const std::vector<IntVec>& normals, Pairing pairing) {
  const int dim = pairing.dim();
  std::vector<IntVec> cleaned;
  for (const auto& n : normals) {
    if (static_cast<int>(n.size()) != dim) throw std::domain_error("from_inequalities: normal length mismatch");
    if (is_zero_vector(n)) continue;
    cleaned.push_back(primitive_int_vector(n));
  }
  // Pointed iff the kept normals span the dual space.
  if (rank_int(cleaned) != dim) throw NotPointedError(kernel_vector_of(cleaned, dim));

  std::vector<IntVec> funcs;
  funcs.reserve(cleaned.size());
  for (const auto& n : cleaned) funcs.push_back(pairing.apply_transpose(n));
  std::vector<IntVec> rays = dd_extreme_rays(funcs, dim);
  if (rank_int(rays) != dim)
    throw std::domain_error("from_inequalities: described cone is not full-dimensional");

  std::vector<IntVec> facets;
  for (const auto& n : cleaned) {
    std::vector<IntVec> tight;
    for (const auto& r : rays)
      if (pairing.pair(n, r) == 0) tight.push_back(r);
    if (rank_int(std::move(tight)) == dim - 1) facets.push_back(n);
  }
  PointedCone c(dim, std::move(pairing));
  c.finalize(std::move(rays), std::move(facets));
  return c;
}

bool PointedCone::contains(const RatVec& point, Containment mode) const {
  for (const auto& f : facets_) {
    Rational v = pairing_.pair(f, point);
    if (mode == Containment::WEAK ? v < 0 : v <= 0) return false;
  }
  return true;
}

PointedCone PointedCone::dual() const {
  PointedCone d(dim_, pairing_.transposed());
  d.finalize(facets_, rays_);
  return d;
}

PointedCone PointedCone::delete_facets(const std::vector<int>& keep) const {
  std::vector<IntVec> kept;
  kept.reserve(keep.size());
  for (int i : keep) kept.push_back(facets_.at(i));
  return from_inequalities(kept, pairing_);
}

FaceLattice PointedCone::face_lattice() const {
  const int nrays = static_cast<int>(rays_.size());
  Bitset full(nrays);
  for (int i = 0; i < nrays; ++i) full.set(i);

  std::unordered_map<Bitset, bool, BitsetHash> seen;
  std::vector<Bitset> work{full};
  seen.emplace(full, true);
  // Closure of the facet masks under intersection: every face of a pointed
  // cone is the intersection of the facets containing it.
  for (size_t head = 0; head < work.size(); ++head) {
    Bitset cur = work[head];
    for (const auto& fm : incidence_) {
      Bitset next = cur & fm;
      if (seen.emplace(next, true).second) work.push_back(next);
    }
  }
  FaceLattice lat;
  lat.faces.reserve(seen.size());
  for (const auto& [mask, unused] : seen) {
    int r = rank_of_mask(rays_, mask);
    if (r == 0) continue;  // the apex is not a projective face
    lat.faces.emplace_back(mask, r);
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const auto& a, const auto& b) {
    return a.second < b.second || (a.second == b.second && a.first < b.first);
  });
  return lat;
}

std::vector<long> PointedCone::f_vector() const {
  FaceLattice lat = face_lattice();
  std::vector<long> counts(dim_ + 1, 0);
  for (const auto& [mask, d] : lat.faces) ++counts[d];
  std::vector<long> f;
  for (int d = 1; d <= dim_ - 1; ++d) f.push_back(counts[d]);
  f.push_back(1);
  return f;
}

}  // namespace exc
