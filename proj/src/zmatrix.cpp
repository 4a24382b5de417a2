#include "exc/zmatrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace exc {

bool is_positive(const RatMatrix& m) {
  const int r = m.rows(), n = m.cols();
  if (r > n) throw std::domain_error("is_positive: more rows than columns");
  std::vector<int> all_rows(r);
  for (int i = 0; i < r; ++i) all_rows[i] = i;
  for (const Subset& cols : k_subsets(n, r)) {
    std::vector<int> c0(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) c0[i] = cols[i] - 1;
    if (det(m.select(all_rows, c0)) <= 0) return false;
  }
  return true;
}

PositiveMatrix PositiveMatrix::from_matrix(RatMatrix m) {
  if (!is_positive(m)) {
    // Name one violating minor for the error message.
    const int r = m.rows(), n = m.cols();
    std::vector<int> all_rows(r);
    for (int i = 0; i < r; ++i) all_rows[i] = i;
    for (const Subset& cols : k_subsets(n, r)) {
      std::vector<int> c0(cols.size());
      for (size_t i = 0; i < cols.size(); ++i) c0[i] = cols[i] - 1;
      if (det(m.select(all_rows, c0)) <= 0) {
        std::string label;
        for (int c : cols) label += std::to_string(c) + " ";
        throw std::domain_error("matrix is not positive: minor on columns " + label + "is not > 0");
      }
    }
  }
  return PositiveMatrix(std::move(m));
}

RatVec PositiveMatrix::column_twisted(int k, int i) const {
  const int n = cols();
  long periods = 0;
  long j = i;
  while (j < 1) {
    j += n;
    --periods;
  }
  while (j > n) {
    j -= n;
    ++periods;
  }
  RatVec v = data_.column(static_cast<int>(j) - 1);
  bool flip = ((k - 1) % 2 != 0) && (periods % 2 != 0);
  if (flip)
    for (auto& x : v) x = -x;
  return v;
}

PositiveMatrix vandermonde(const RatVec& nodes, int rows) {
  const int n = static_cast<int>(nodes.size());
  if (rows > n) throw std::domain_error("vandermonde: more rows than nodes");
  for (int i = 1; i < n; ++i)
    if (!(nodes[i - 1] < nodes[i])) throw std::domain_error("vandermonde: nodes must be strictly increasing");
  RatMatrix m(rows, n);
  for (int c = 0; c < n; ++c) {
    Rational p = 1;
    for (int r = 0; r < rows; ++r) {
      m.at(r, c) = p;
      p *= nodes[c];
    }
  }
  return PositiveMatrix::from_matrix(std::move(m));
}

PositiveMatrix random_positive(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < rows) throw std::domain_error("random_positive: need cols >= rows >= 1");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // Distinct dyadic nodes u/256 with u a byte from the generator.
    std::set<long> drawn;
    while (static_cast<int>(drawn.size()) < cols) drawn.insert(static_cast<long>(rng.below(256)));
    RatVec nodes;
    for (long u : drawn) nodes.push_back(make_rational(u, 256));
    RatMatrix v = vandermonde(nodes, rows).matrix();

    // LU without pivoting; ascending-node Vandermonde pivots are positive.
    RatMatrix l = RatMatrix::identity(rows);
    RatMatrix u = v;
    bool ok = true;
    for (int k = 0; k < rows && ok; ++k) {
      if (u.at(k, k) == 0) {
        ok = false;
        break;
      }
      for (int r = k + 1; r < rows; ++r) {
        Rational f = u.at(r, k) / u.at(k, k);
        l.at(r, k) = f;
        for (int c = 0; c < cols; ++c) u.at(r, c) -= f * u.at(k, c);
      }
    }
    if (!ok) continue;
    // Z = transpose(L) * D * (D^-1 U), with D the diagonal of U's pivot block.
    RatMatrix scaled = u;
    for (int r = 0; r < rows; ++r) {
      Rational d = u.at(r, r);
      for (int c = 0; c < cols; ++c) scaled.at(r, c) = u.at(r, c) / d;
    }
    RatMatrix z = l.transpose();
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < rows; ++c) z.at(r, c) *= u.at(c, c);
    z = z * scaled;
    if (is_positive(z)) return PositiveMatrix::from_matrix(std::move(z));
  }
  throw std::runtime_error("random_positive: failed to produce a positive matrix in 100 attempts");
}

PositiveMatrix twist(const PositiveMatrix& z, int k, int m) {
  if (z.rows() != k + m) throw std::domain_error("twist: row count must equal k+m");
  const int d = k + m;
  const int n = z.cols();
  RatMatrix w(d, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<RatVec> window;
    window.reserve(d - 1);
    // Columns of a d-row positive matrix wrap with (-1)^(d-1); that is the
    // sign under which the cyclic shift preserves maximal-minor positivity.
    for (int j = i - m + 1; j <= i + k - 1; ++j) window.push_back(z.column_twisted(d, j));
    ExteriorVector star = hodge_star(wedge_all(window, d));
    RatVec col = star.dense();
    for (int r = 0; r < d; ++r) w.at(r, i - 1) = col[r];
  }
  if (!is_positive(w)) throw std::runtime_error("twist: result failed positivity (sign-convention bug)");
  return PositiveMatrix::from_matrix(std::move(w));
}

}  // namespace exc
