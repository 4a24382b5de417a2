#include "exc/schubert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exc {

PointedCone exterior_cyclic_cone(const PositiveMatrix& z, int k) {
  RatMatrix w = wedge_power_matrix(z, k);
  std::vector<RatVec> rays;
  rays.reserve(w.cols());
  for (int c = 0; c < w.cols(); ++c) rays.push_back(w.column(c));
  return PointedCone::from_rays(rays, Pairing::identity(w.rows()));
}

bool is_decomposable(const ExteriorVector& h, std::vector<RatVec>* factors) {
  auto f = decompose(h);
  if (!f) return false;
  if (factors) *factors = *f;
  return true;
}

int SchubertClassification::schubert_count() const {
  int c = 0;
  for (const auto& f : facets)
    if (f.kind == FacetKind::SCHUBERT) ++c;
  return c;
}

SchubertClassification classify_facets(const PositiveMatrix& z, int k) {
  const int d = z.rows();
  PointedCone cone = exterior_cyclic_cone(z, k);

  // Ray index -> wedge label, matching primitive column vectors.
  std::map<IntVec, Subset, bool (*)(const IntVec&, const IntVec&)> label_of(intvec_less);
  RatMatrix w = wedge_power_matrix(z, k);
  auto labels = k_subsets(z.cols(), k);
  for (size_t c = 0; c < labels.size(); ++c) label_of[primitive_int_vector(w.column(static_cast<int>(c)))] = labels[c];

  SchubertClassification out{std::move(cone), {}};
  for (size_t f = 0; f < out.cone.facets().size(); ++f) {
    FacetClassification fc;
    fc.facet_index = static_cast<int>(f);
    fc.facet_vector = out.cone.facets()[f];
    for (int r : out.cone.incidence()[f].bits()) fc.vertices.push_back(label_of.at(out.cone.rays()[r]));
    // The inner-product normal, re-read through the top pairing as a vector
    // of complementary degree.
    RatVec func(fc.facet_vector.size());
    for (size_t i = 0; i < func.size(); ++i) func[i] = Rational(fc.facet_vector[i]);
    fc.normal = functional_to_exterior(func, k, d);
    std::vector<RatVec> factors;
    if (is_decomposable(fc.normal, &factors)) {
      fc.kind = FacetKind::SCHUBERT;
      fc.witness = std::move(factors);
    } else {
      fc.kind = FacetKind::NON_SCHUBERT;
    }
    out.facets.push_back(std::move(fc));
  }
  return out;
}

std::vector<IntVec> predicted_schubert_normals(const PositiveMatrix& z) {
  if (z.rows() != 4) throw std::domain_error("predicted_schubert_normals: requires k=m=2 (4 rows)");
  std::vector<IntVec> out;
  for (const auto& line : all_bar_lines(z)) out.push_back(primitive_int_vector(line.dense()));
  std::sort(out.begin(), out.end(), intvec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointedCone schubert_polytope(const PositiveMatrix& z, int k) {
  SchubertClassification cls = classify_facets(z, k);
  std::vector<int> keep;
  for (const auto& f : cls.facets)
    if (f.kind == FacetKind::SCHUBERT) keep.push_back(f.facet_index);
  return cls.cone.delete_facets(keep);
}

namespace {

bool on_grassmannian(const IntVec& v, int k, int d) {
  RatVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  ExteriorVector y = ExteriorVector::from_dense(k, d, q);
  return decompose(y).has_value();
}

// Vector v with <v, x> = top_pair(x, w) for x of degree k: the stacked
// bracket against w as an inner-product functional.
RatVec stacked_functional_vector(const ExteriorVector& w, int k, int d) {
  auto idx = k_subsets(d, k);
  RatVec v(idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    v[i] = top_pair(ExteriorVector::basis(d, idx[i]), w);
  return v;
}

}  // namespace

TwistDualityReport twist_duality_check(const PositiveMatrix& z) {
  TwistDualityReport rep;
  if (z.rows() != 4) throw std::domain_error("twist_duality_check: requires k=m=2 (4 rows)");
  SchubertClassification cls = classify_facets(z, 2);
  std::vector<IntVec> schubert_vectors;
  for (const auto& f : cls.facets)
    if (f.kind == FacetKind::SCHUBERT) schubert_vectors.push_back(f.facet_vector);
  std::sort(schubert_vectors.begin(), schubert_vectors.end(), intvec_less);
  rep.normals_are_predicted = (schubert_vectors == predicted_schubert_normals(z));

  PointedCone tilde = schubert_polytope(z, 2);
  PointedCone twisted_dual = exterior_cyclic_cone(twist(z, 2, 2), 2).dual();
  rep.cones_equal = tilde.same_cone(twisted_dual);

  // Rays of the Schubert cone lying on the Grassmannian are exactly the
  // wedge vertices of the original cone, as projective points.
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> vertex_set(intvec_less);
  for (const auto& r : cls.cone.rays()) vertex_set.insert(projective_canonical(r));
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> on_gr(intvec_less);
  for (const auto& r : tilde.rays())
    if (on_grassmannian(r, 2, 4)) on_gr.insert(projective_canonical(r));
  rep.vertex_identity = (on_gr == vertex_set);

  rep.detail = rep.cones_equal ? "schubert cone equals the dual of the twisted cone"
                               : "cone comparison failed";
  return rep;
}

bool schubert_normals_are_triple_wedges(const PositiveMatrix& z) {
  if (z.rows() != 5) throw std::domain_error("schubert_normals_are_triple_wedges: requires k+m=5");
  PositiveMatrix w = twist(z, 3, 2);
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> wedges(intvec_less);
  for (const Subset& s : k_subsets(z.cols(), 3)) {
    ExteriorVector triple = wedge_all({w.matrix().column(s[0] - 1), w.matrix().column(s[1] - 1),
                                       w.matrix().column(s[2] - 1)}, 5);
    wedges.insert(projective_canonical(primitive_int_vector(triple.dense())));
  }
  SchubertClassification cls = classify_facets(z, 3);
  for (const auto& f : cls.facets) {
    if (f.kind != FacetKind::SCHUBERT) continue;
    if (!wedges.count(projective_canonical(f.facet_vector))) return false;
  }
  return true;
}

bool consecutive_facets_present(const PositiveMatrix& z, int k) {
  const int d = z.rows();
  const int m = d - k;
  PointedCone cone = exterior_cyclic_cone(z, k);
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> facet_set(intvec_less);
  for (const auto& f : cone.facets()) facet_set.insert(projective_canonical(f));

  std::vector<ExteriorVector> hyperplanes;
  if (m == 1) {
    // Endpoint hyperplanes: the brackets against the first and last column.
    hyperplanes.push_back(ExteriorVector::from_vector(z.matrix().column(0)));
    hyperplanes.push_back(ExteriorVector::from_vector(z.matrix().column(z.cols() - 1)));
  } else if (m == 2) {
    for (int i = 1; i < z.cols(); ++i)
      hyperplanes.push_back(wedge_all({z.matrix().column(i - 1), z.matrix().column(i)}, d));
  } else {
    throw std::domain_error("consecutive_facets_present: implemented for m=1 and m=2");
  }
  for (const auto& h : hyperplanes) {
    IntVec v = primitive_int_vector(stacked_functional_vector(h, k, d));
    if (!facet_set.count(projective_canonical(v))) return false;
  }
  return true;
}

}  // namespace exc
