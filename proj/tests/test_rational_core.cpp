#include "doctest.h"

#include "exc/matrix.hpp"
#include "exc/multipoly.hpp"
#include "exc/rational.hpp"

using namespace exc;

namespace {

RatMatrix random_matrix(SplitMix64& rng, int rows, int cols, long lo = -9, long hi = 9) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = make_rational(rng.range(lo, hi), rng.range(1, 4));
  return m;
}

// Independent oracle: determinant by cofactor expansion along the first row.
Rational det_cofactor(const RatMatrix& m) {
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational total = 0;
  std::vector<int> rows(n - 1);
  for (int i = 1; i < n; ++i) rows[i - 1] = i;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) != 0) {
      std::vector<int> cols;
      for (int j = 0; j < n; ++j)
        if (j != c) cols.push_back(j);
      total += Rational(sign) * m.at(0, c) * det_cofactor(m.select(rows, cols));
    }
    sign = -sign;
  }
  return total;
}

RatMatrix vandermonde_nodes(const std::vector<long>& nodes, int rows) {
  RatMatrix m(rows, static_cast<int>(nodes.size()));
  for (size_t c = 0; c < nodes.size(); ++c) {
    Rational p = 1;
    for (int r = 0; r < rows; ++r) {
      m.at(r, static_cast<int>(c)) = p;
      p *= Rational(nodes[c]);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rational string round trip and canonical form") {
  CHECK(rational_to_string(make_rational(6, -4)) == "-3/2");
  CHECK(rational_to_string(make_rational(0, 7)) == "0");
  CHECK(rational_to_string(make_rational(5, 1)) == "5");
  CHECK(rational_from_string("-3/2") == make_rational(-3, 2));
  CHECK(rational_from_string("12") == Rational(12));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(rational_from_string("x/2"), std::domain_error);
}

TEST_CASE("det on pinned examples") {
  CHECK(det(RatMatrix::identity(4)) == 1);
  CHECK(det(RatMatrix{{1, 2}, {3, 4}}) == -2);
  // Vandermonde on nodes 1,2,3,4: product of ascending differences.
  RatMatrix v = vandermonde_nodes({1, 2, 3, 4}, 4);
  CHECK(det(v) == 12);
  CHECK(det(v) == det_cofactor(v));
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), std::domain_error);
}

TEST_CASE("det agrees with the cofactor oracle on random matrices") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    RatMatrix m = random_matrix(rng, n, n);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("det is multiplicative") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    RatMatrix a = random_matrix(rng, n, n);
    RatMatrix b = random_matrix(rng, n, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("rank on pinned examples") {
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix::identity(5)) == 5);
  RatMatrix singular{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
  CHECK(rank(singular) == 2);
}

TEST_CASE("kernel basis on pinned examples") {
  CHECK(kernel_basis(RatMatrix::identity(3)).rows() == 0);

  RatMatrix sum_row{{1, 1, 1}};
  RatMatrix k = kernel_basis(sum_row);
  REQUIRE(k.rows() == 2);
  CHECK((sum_row * k.transpose()).is_zero());
  CHECK(rank(k) == 2);

  RatMatrix v = vandermonde_nodes({1, 2, 3, 4, 5, 6}, 4);
  RatMatrix kv = kernel_basis(v);
  REQUIRE(kv.rows() == 2);
  CHECK((v * kv.transpose()).is_zero());
}

TEST_CASE("rank and kernel dimensions are consistent on random matrices") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(5));
    int cols = 1 + static_cast<int>(rng.below(6));
    RatMatrix m = random_matrix(rng, rows, cols, -3, 3);
    RatMatrix k = kernel_basis(m);
    CHECK(rank(m) + k.rows() == cols);
    if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
    // rank(m) = rows(m) - dim kernel of the transpose
    CHECK(rank(m) == rows - kernel_basis(m.transpose()).rows());
  }
}

TEST_CASE("rank engine matches batch rank") {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 + static_cast<int>(rng.below(5));
    int count = 1 + static_cast<int>(rng.below(8));
    RatMatrix m = random_matrix(rng, dim, count, -2, 2);
    RankEngine eng(dim);
    for (int c = 0; c < count; ++c) eng.push(m.column(c));
    CHECK(eng.rank() == rank(m));
    eng.pop();
    std::vector<int> all_rows(dim), head(count - 1);
    for (int i = 0; i < dim; ++i) all_rows[i] = i;
    for (int i = 0; i + 1 < count; ++i) head[i] = i;
    CHECK(eng.rank() == rank(m.select(all_rows, head)));
  }
}

TEST_CASE("poly_det on pinned examples") {
  std::vector<std::string> vars{"x"};
  MultiPoly x = MultiPoly::variable(vars, 0);
  MultiPoly one = MultiPoly::constant(vars, Rational(1));
  CHECK(poly_det({{x}}) == x);
  MultiPoly d = poly_det({{x, one}, {one, x}});
  CHECK(d == x * x - one);
  CHECK(coefficient_sign_pattern(d) == SignPattern::MIXED);
  CHECK_THROWS_AS(poly_det({{x, one}}), std::domain_error);
}

TEST_CASE("coefficient sign patterns") {
  std::vector<std::string> vars{"x", "y"};
  MultiPoly x = MultiPoly::variable(vars, 0);
  MultiPoly y = MultiPoly::variable(vars, 1);
  CHECK(coefficient_sign_pattern(x + y) == SignPattern::ALL_POSITIVE);
  CHECK(coefficient_sign_pattern(-(x + y)) == SignPattern::ALL_NEGATIVE);
  CHECK(coefficient_sign_pattern(x - y) == SignPattern::MIXED);
  CHECK(coefficient_sign_pattern(x - x) == SignPattern::ZERO);
}

TEST_CASE("poly_det evaluated at random points equals det of evaluated matrix") {
  SplitMix64 rng(45);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    std::vector<std::vector<MultiPoly>> pm(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        MultiPoly entry = MultiPoly::constant(vars, Rational(rng.range(-3, 3)));
        for (int v = 0; v < 3; ++v)
          if (rng.below(3) == 0)
            entry = entry + MultiPoly::variable(vars, v) * MultiPoly::constant(vars, Rational(rng.range(-2, 2)));
        pm[r][c] = entry;
      }
    RatVec point{make_rational(rng.range(-5, 5), 3), make_rational(rng.range(-5, 5), 2), Rational(rng.range(-5, 5))};
    RatMatrix evaluated(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) evaluated.at(r, c) = pm[r][c].evaluate(point);
    CHECK(poly_det(pm).evaluate(point) == det(evaluated));
  }
}

TEST_CASE("multipoly printing is deterministic graded lex") {
  std::vector<std::string> vars{"x", "y"};
  MultiPoly x = MultiPoly::variable(vars, 0);
  MultiPoly y = MultiPoly::variable(vars, 1);
  MultiPoly p = x * x + y * MultiPoly::constant(vars, Rational(-2)) + MultiPoly::constant(vars, Rational(3));
  CHECK(p.to_string() == "x^2 - 2*y + 3");
}
