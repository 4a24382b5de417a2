#include "doctest.h"

#include "exc/amplituhedron.hpp"

using namespace exc;

namespace {

GrassmannPoint vertex_point(const PositiveMatrix& z, int i, int j) {
  RatMatrix m(2, 4);
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = z.matrix().at(c, i - 1);
    m.at(1, c) = z.matrix().at(c, j - 1);
  }
  return make_grassmann_point(m);
}

}  // namespace

TEST_CASE("image samples land in every oracle") {
  PositiveMatrix z = random_positive(4, 6, 101);
  auto bars = predicted_schubert_normals(z);
  PointedCone cone = exterior_cyclic_cone(z, 2);
  for (std::uint64_t s = 0; s < 25; ++s) {
    GrassmannPoint y = sample_amplituhedron(z, 2, 500 + s);
    CHECK(member_bar(y, bars) != Verdict::OUT);
    CHECK(member_cone(y, cone) != Verdict::OUT);
    CHECK(member_signflip(y, z, 2) != Verdict::OUT);
  }
}

TEST_CASE("vertices are boundary points; distant twist lines are outside") {
  PositiveMatrix z = random_positive(4, 6, 102);
  auto bars = predicted_schubert_normals(z);
  GrassmannPoint v12 = vertex_point(z, 1, 2);
  CHECK(member_bar(v12, bars) == Verdict::BOUNDARY);
  CHECK(member_signflip(v12, z, 2) == Verdict::BOUNDARY);

  // The line spanned by two distant twist columns lies outside the cone.
  PositiveMatrix w = twist(z, 2, 2);
  RatMatrix line(2, 4);
  for (int c = 0; c < 4; ++c) {
    line.at(0, c) = w.matrix().at(c, 0);  // W_1
    line.at(1, c) = w.matrix().at(c, 3);  // W_4
  }
  GrassmannPoint bar14 = make_grassmann_point(line);
  CHECK(member_bar(bar14, bars) == Verdict::OUT);
  CHECK(member_cone(bar14, exterior_cyclic_cone(z, 2)) == Verdict::OUT);
}

TEST_CASE("n = k + m reduces to nonnegative wedge coordinates") {
  PositiveMatrix z = PositiveMatrix::from_matrix(RatMatrix::identity(4));
  auto bars = predicted_schubert_normals(z);
  SplitMix64 rng(103);
  for (int t = 0; t < 200; ++t) {
    GrassmannPoint y = random_grassmann_point(2, 4, rng);
    bool nonneg = true, strict = true;
    for (const auto& [s, c] : y.plucker.coeffs()) {
      if (c < 0) nonneg = false;
      if (c <= 0) strict = false;
    }
    if (y.plucker.coeffs().size() < 6) strict = false;
    Verdict v = member_bar(y, bars);
    if (v == Verdict::IN) CHECK(strict);
    if (v == Verdict::OUT) CHECK(!strict);
    if (nonneg) CHECK(v != Verdict::OUT);
  }
}

TEST_CASE("oracles agree away from boundaries at n=5") {
  PositiveMatrix z = random_positive(4, 5, 104);
  auto bars = predicted_schubert_normals(z);
  PointedCone cone = exterior_cyclic_cone(z, 2);
  SplitMix64 rng(105);
  int checked = 0;
  for (int t = 0; t < 600; ++t) {
    GrassmannPoint y = random_grassmann_point(2, 4, rng);
    Verdict vb = member_bar(y, bars);
    Verdict vc = member_cone(y, cone);
    Verdict vs = member_signflip(y, z, 2);
    if (vb == Verdict::BOUNDARY || vc == Verdict::BOUNDARY || vs == Verdict::BOUNDARY) continue;
    CHECK(vb == vc);
    CHECK(vc == vs);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("dual description against the twisted matrix at n=5") {
  PositiveMatrix z = random_positive(4, 5, 106);
  PositiveMatrix w = twist(z, 2, 2);
  auto bars_w = predicted_schubert_normals(w);
  SplitMix64 rng(107);
  for (int t = 0; t < 400; ++t) {
    GrassmannPoint y = random_grassmann_point(2, 4, rng);
    Verdict vd = member_dual(y, z);
    Verdict vb = member_bar(orthogonal_complement_point(y), bars_w);
    if (vd == Verdict::BOUNDARY || vb == Verdict::BOUNDARY) continue;
    CHECK(vd == vb);
    // The zero-flip region is the all-pairs-positive bracket region.
    bool allpos = true;
    for (int i = 1; i <= 5 && allpos; ++i)
      for (int j = i + 1; j <= 5; ++j)
        if (y_bracket(y, z, i, j) <= 0) {
          allpos = false;
          break;
        }
    CHECK((vd == Verdict::IN) == allpos);
  }
  // A wedge vertex of z annihilates its own pair bracket: boundary verdict.
  GrassmannPoint v12 = vertex_point(z, 1, 2);
  CHECK(member_dual(v12, z) == Verdict::BOUNDARY);
}

TEST_CASE("bar brackets expand through the pair map") {
  // <Y, W_a ^ W_b> equals the three-term pair expansion evaluated on the
  // stacked brackets of Y; this ties the separation map to the bar lines.
  for (std::uint64_t seed : {108ull, 109ull}) {
    for (int n : {5, 6}) {
      PositiveMatrix z = random_positive(4, n, seed);
      auto bars = predicted_schubert_normals(z);
      PositiveMatrix w = twist(z, 2, 2);
      SplitMix64 rng(seed + n);
      GrassmannPoint y = random_grassmann_point(2, 4, rng);
      RatVec yd = y.plucker.dense();
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          ExteriorVector bar = wedge(ExteriorVector::from_vector(w.matrix().column(a - 1)),
                                     ExteriorVector::from_vector(w.matrix().column(b - 1)));
          RatVec bar_dense = bar.dense();
          Rational lhs = 0;
          for (size_t i = 0; i < yd.size(); ++i) lhs += yd[i] * bar_dense[i];
          RatVec img = separation_image_of_pair(z, a, b);
          Rational rhs = 0;
          int idx = 0;
          for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q, ++idx)
              if (img[idx] != 0) rhs += img[idx] * y_bracket(y, z, p, q);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("separation certificate holds and the joint strict region is empty") {
  PositiveMatrix z = random_positive(4, 7, 110);
  SeparationReport rep = separation_certificate(z);
  CHECK(rep.separated);
  CHECK(rep.generators == 21);

  auto bars = predicted_schubert_normals(z);
  SplitMix64 rng(111);
  long joint_hits = 0;
  for (int t = 0; t < 20000; ++t) {
    GrassmannPoint y = random_grassmann_point(2, 4, rng);
    bool all_pairs_positive = true;
    for (int i = 1; i <= 7 && all_pairs_positive; ++i)
      for (int j = i + 1; j <= 7; ++j)
        if (y_bracket(y, z, i, j) <= 0) {
          all_pairs_positive = false;
          break;
        }
    if (all_pairs_positive && member_bar(y, bars) == Verdict::IN) ++joint_hits;
  }
  CHECK(joint_hits == 0);
}

TEST_CASE("boundary audit at n=6: the passing facets miss 4-cliques") {
  PositiveMatrix z = random_positive(4, 6, 112);
  BoundaryAuditReport rep = linear_boundary_audit(z);
  CHECK(rep.facets.size() == 30);
  CHECK(rep.passing == 6);
  CHECK(rep.all_passing_are_clique_complements);
}
