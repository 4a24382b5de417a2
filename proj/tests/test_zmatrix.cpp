#include "doctest.h"

#include "exc/twistor.hpp"
#include "exc/zmatrix.hpp"

using namespace exc;

namespace {

RatVec nodes_of(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rational br(const PositiveMatrix& z, int k, std::vector<int> cols) {
  std::vector<BracketArg> args;
  for (int c : cols) args.emplace_back(c);
  return bracket(z, k, args);
}

}  // namespace

TEST_CASE("vandermonde construction and positivity") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5, 6}), 4);
  CHECK(z.rows() == 4);
  CHECK(z.cols() == 6);
  CHECK(z.matrix().at(1, 2) == 3);
  CHECK(z.matrix().at(3, 5) == 216);

  PositiveMatrix small = vandermonde(nodes_of({0, 1}), 2);
  CHECK(small.matrix().at(0, 0) == 1);
  CHECK(small.matrix().at(1, 0) == 0);
  CHECK(det(small.matrix()) == 1);

  // Degenerate-locus nodes are still ascending, so still positive.
  RatVec deg{Rational(1), Rational(3), Rational(4), Rational(7), Rational(8), make_rational(47, 5)};
  CHECK_NOTHROW(vandermonde(deg, 4));

  CHECK_THROWS_AS(vandermonde(nodes_of({2, 1, 3}), 2), std::domain_error);
}

TEST_CASE("is_positive on pinned examples") {
  CHECK(is_positive(vandermonde(nodes_of({1, 2, 3, 4, 5, 6}), 4).matrix()));
  CHECK(is_positive(RatMatrix::identity(4)));  // n = k+m, single minor 1
  CHECK(!is_positive(RatMatrix{{1, 0}, {0, -1}}));
}

TEST_CASE("random_positive is deterministic and positive") {
  PositiveMatrix a = random_positive(4, 6, 1);
  PositiveMatrix b = random_positive(4, 6, 1);
  CHECK(a.matrix() == b.matrix());
  CHECK(is_positive(a.matrix()));
  for (std::uint64_t seed : {2ull, 3ull, 10ull, 99ull}) CHECK(is_positive(random_positive(4, 7, seed).matrix()));
  PositiveMatrix tiny = random_positive(2, 2, 5);
  CHECK(tiny.rows() == 2);
  // k = n: the single wedge column is the determinant, a single point.
  CHECK(wedge_power_matrix(tiny, 2).cols() == 1);
  CHECK(wedge_power_matrix(tiny, 2).at(0, 0) > 0);
}

TEST_CASE("twisted column access wraps with (-1)^(k-1)") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5}), 4);
  const int n = 5;
  CHECK(z.column_twisted(2, 1) == z.matrix().column(0));
  RatVec wrapped = z.column_twisted(2, n + 1);
  for (int r = 0; r < 4; ++r) CHECK(wrapped[r] == -z.matrix().column(0)[r]);
  RatVec w3 = z.column_twisted(3, 0);  // k=3 wraps with +1
  CHECK(w3 == z.matrix().column(n - 1));
}

TEST_CASE("twist columns are normal to their windows") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5}), 4);
  PositiveMatrix w = twist(z, 2, 2);
  const int n = 5;
  for (int i = 1; i <= n; ++i) {
    RatVec wi = w.matrix().column(i - 1);
    for (int j : {i - 1, i, i + 1}) {
      RatVec zj = z.column_twisted(2, j);
      Rational dot = 0;
      for (int r = 0; r < 4; ++r) dot += wi[r] * zj[r];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("twist preserves positivity across shapes") {
  for (int n : {4, 5, 6, 7}) {
    RatVec nodes;
    for (int i = 1; i <= n; ++i) nodes.emplace_back(i);
    CHECK_NOTHROW(twist(vandermonde(nodes, 4), 2, 2));
  }
  // (k,m) = (3,2) and (2,3)
  RatVec six = nodes_of({1, 2, 3, 4, 5, 6});
  CHECK_NOTHROW(twist(vandermonde(six, 5), 3, 2));
  CHECK_NOTHROW(twist(vandermonde(six, 5), 2, 3));
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) CHECK_NOTHROW(twist(random_positive(4, 6, seed), 2, 2));
}

TEST_CASE("double twist restores vertex lines with positive ratio") {
  for (std::uint64_t seed : {21ull, 22ull}) {
    for (int n : {5, 6, 7}) {
      PositiveMatrix z = random_positive(4, n, seed);
      PositiveMatrix ww = twist(twist(z, 2, 2), 2, 2);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          ExteriorVector zij = wedge_all({z.matrix().column(i - 1), z.matrix().column(j - 1)}, 4);
          ExteriorVector wij = wedge_all({ww.matrix().column(i - 1), ww.matrix().column(j - 1)}, 4);
          // wij = c * zij with c > 0
          const auto& [s0, c0] = *zij.coeffs().begin();
          Rational ratio = wij.coeff(s0) / c0;
          CHECK(ratio > 0);
          CHECK(wij == zij * ratio);
        }
    }
  }
}

TEST_CASE("schubert normals intersect transversally") {
  // det[W_i W_j W_k W_l] is a maximal minor of the twist, nonzero (positive).
  for (int n : {5, 6, 7}) {
    RatVec nodes;
    for (int i = 1; i <= n; ++i) nodes.emplace_back(i);
    PositiveMatrix w = twist(vandermonde(nodes, 4), 2, 2);
    for (const Subset& q : k_subsets(n, 4)) {
      std::vector<int> cols;
      for (int c : q) cols.push_back(c - 1);
      std::vector<int> rows{0, 1, 2, 3};
      CHECK(det(w.matrix().select(rows, cols)) != 0);
    }
  }
}

TEST_CASE("wedge power matrix shapes and pinned entries") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5, 6}), 4);
  CHECK(wedge_power_matrix(z, 1) == z.matrix());

  RatMatrix w2 = wedge_power_matrix(z, 2);
  CHECK(w2.rows() == 6);
  CHECK(w2.cols() == 15);
  // Ascending-minor convention: entry (row {1,2}, column {1,2}) is b - a.
  // The columns are the wedges Z_i ^ Z_j of the matrix with nodes a..f.
  CHECK(w2.at(0, 0) == Rational(2) - Rational(1));
  CHECK(w2.at(1, 0) == Rational(4) - Rational(1));          // b^2 - a^2
  CHECK(w2.at(3, 0) == Rational(1) * Rational(2) * (Rational(2) - Rational(1)));  // ab(b-a)
  CHECK(w2.at(5, 14) == Rational(25) * Rational(36) * (Rational(6) - Rational(5)));

  // Top wedge for a square positive matrix is the single positive det.
  PositiveMatrix sq = vandermonde(nodes_of({1, 2, 3, 4}), 4);
  RatMatrix top = wedge_power_matrix(sq, 4);
  CHECK(top.rows() == 1);
  CHECK(top.cols() == 1);
  CHECK(top.at(0, 0) == 12);
}

TEST_CASE("brackets against the vandermonde difference-product oracle") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4}), 4);
  CHECK(br(z, 2, {1, 2, 3, 4}) == 12);
  CHECK(br(z, 2, {1, 1, 3, 4}) == 0);
  CHECK_THROWS_AS(br(z, 2, {1, 2, 3, 4, 4}), std::domain_error);

  PositiveMatrix z6 = vandermonde(nodes_of({1, 2, 3, 4, 5, 6}), 4);
  SplitMix64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Subset cols = k_subsets(6, 4)[rng.below(15)];
    RatVec nodes{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)};
    Rational expect = 1;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j) expect *= nodes[cols[j] - 1] - nodes[cols[i] - 1];
    CHECK(br(z6, 2, {cols[0], cols[1], cols[2], cols[3]}) == expect);
  }
}

TEST_CASE("bracket accepts decomposable exterior arguments and mixed forms") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5}), 4);
  auto col = [&](int i) { return z.matrix().column(i - 1); };
  ExteriorVector l12 = wedge_all({col(1), col(2)}, 4);
  CHECK(bracket(z, 2, {BracketArg(l12), BracketArg(3), BracketArg(4)}) == br(z, 2, {1, 2, 3, 4}));
  ExteriorVector bad = ExteriorVector::basis(4, {1, 2}) + ExteriorVector::basis(4, {3, 4});
  CHECK_THROWS_AS(bracket(z, 2, {BracketArg(bad), BracketArg(3), BracketArg(4)}), std::domain_error);
}

TEST_CASE("bar lines: wrap handling and sign structure") {
  PositiveMatrix z = vandermonde(nodes_of({1, 2, 3, 4, 5, 6}), 4);
  CHECK_THROWS_AS(bar_line(z, 2, 2), std::domain_error);
  // bar(i,i+1) spans the orthogonal complement of span{Z_i, Z_{i+1}}: it is
  // the Hodge star of (i,i+1) up to a positive factor.
  auto lines = all_bar_lines(z);
  auto line_at = [&](int i, int j) {
    int idx = 0;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b, ++idx)
        if (a == i && b == j) return lines[idx];
    throw std::logic_error("pair not found");
  };
  for (int i = 1; i <= 5; ++i) {
    ExteriorVector expected = hodge_star(wedge_all({z.matrix().column(i - 1), z.matrix().column(i)}, 4));
    ExteriorVector got = line_at(i, i + 1);
    const auto& [s0, c0] = *expected.coeffs().begin();
    Rational ratio = got.coeff(s0) / c0;
    CHECK(ratio > 0);
    CHECK(got == expected * ratio);
  }
}
