#include "doctest.h"

#include <set>

#include "exc/schubert.hpp"

using namespace exc;

namespace {

PositiveMatrix vdm(std::initializer_list<long> nodes, int rows) {
  RatVec v;
  for (long x : nodes) v.emplace_back(x);
  return vandermonde(v, rows);
}

}  // namespace

TEST_CASE("decomposability witness and rejection") {
  std::vector<RatVec> factors;
  CHECK(is_decomposable(ExteriorVector::basis(4, {1, 2}), &factors));
  REQUIRE(factors.size() == 2);
  CHECK(wedge_all(factors, 4) == ExteriorVector::basis(4, {1, 2}));

  ExteriorVector quadric = ExteriorVector::basis(4, {1, 2}) + ExteriorVector::basis(4, {3, 4});
  CHECK(!is_decomposable(quadric));
  CHECK_THROWS_AS(is_decomposable(ExteriorVector(2, 4)), std::domain_error);
}

TEST_CASE("classification of the n=6 facets and the pinned pyramid normal") {
  PositiveMatrix z = vdm({1, 3, 4, 7, 8, 9}, 4);
  SchubertClassification cls = classify_facets(z, 2);
  CHECK(cls.facets.size() == 30);
  CHECK(cls.schubert_count() == 15);
  // The double pyramid over the pentagon has a decomposable normal.
  std::set<std::pair<int, int>> pinned{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {5, 6}};
  bool found = false;
  for (const auto& f : cls.facets) {
    std::set<std::pair<int, int>> s;
    for (const Subset& v : f.vertices) s.emplace(v[0], v[1]);
    if (s == pinned) {
      found = true;
      CHECK(f.kind == FacetKind::SCHUBERT);
      REQUIRE(f.witness.size() == 2);
      CHECK(wedge_all(f.witness, 4) == f.normal);
    }
  }
  CHECK(found);
}

TEST_CASE("schubert witnesses meet every incident vertex span") {
  PositiveMatrix z = random_positive(4, 6, 21);
  SchubertClassification cls = classify_facets(z, 2);
  for (const auto& f : cls.facets) {
    if (f.kind != FacetKind::SCHUBERT) continue;
    for (const Subset& v : f.vertices) {
      // span{witness} and span{Z_a, Z_b} intersect nontrivially.
      RatMatrix stack(4, 4);
      for (int c = 0; c < 4; ++c) {
        stack.at(0, c) = f.witness[0][c];
        stack.at(1, c) = f.witness[1][c];
        stack.at(2, c) = z.matrix().at(c, v[0] - 1);
        stack.at(3, c) = z.matrix().at(c, v[1] - 1);
      }
      CHECK(rank(stack) < 4);
    }
  }
}

TEST_CASE("every facet of the m=1 polytope is schubert") {
  SchubertClassification cls = classify_facets(vdm({1, 2, 3, 4, 5}, 3), 2);
  for (const auto& f : cls.facets) CHECK(f.kind == FacetKind::SCHUBERT);
}

TEST_CASE("schubert polytope contains the original and matches the inequality description") {
  PositiveMatrix z = random_positive(4, 6, 23);
  PointedCone cone = exterior_cyclic_cone(z, 2);
  PointedCone tilde = schubert_polytope(z, 2);
  for (const auto& r : cone.rays()) {
    RatVec p(r.size());
    for (size_t i = 0; i < r.size(); ++i) p[i] = Rational(r[i]);
    CHECK(tilde.contains(p, Containment::WEAK));
  }
  CHECK(tilde.facets() == predicted_schubert_normals(z));
}

TEST_CASE("twist duality at n=5") {
  TwistDualityReport rep = twist_duality_check(random_positive(4, 5, 29));
  CHECK(rep.cones_equal);
  CHECK(rep.vertex_identity);
  CHECK(rep.normals_are_predicted);
}

TEST_CASE("consecutive-pair hyperplanes are facets in the three pinned shapes") {
  CHECK(consecutive_facets_present(vdm({1, 2, 3, 4, 5, 6}, 4), 2));
  CHECK(consecutive_facets_present(vdm({1, 2, 3, 4, 5, 6}, 5), 3));
  CHECK(consecutive_facets_present(vdm({1, 2, 3, 4, 5}, 3), 2));
}
