#include "exc/twistor.hpp"

#include <stdexcept>

namespace exc {

RatMatrix wedge_power_matrix(const PositiveMatrix& z, int k) {
  const int d = z.rows();
  const int n = z.cols();
  if (k < 1 || k > d) throw std::domain_error("wedge_power_matrix: k out of range");
  auto row_idx = k_subsets(d, k);
  auto col_idx = k_subsets(n, k);
  RatMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t c = 0; c < col_idx.size(); ++c) {
    std::vector<int> zcols;
    for (int j : col_idx[c]) zcols.push_back(j - 1);
    for (size_t r = 0; r < row_idx.size(); ++r) {
      std::vector<int> zrows;
      for (int i : row_idx[r]) zrows.push_back(i - 1);
      out.at(static_cast<int>(r), static_cast<int>(c)) = det(z.matrix().select(zrows, zcols));
    }
  }
  return out;
}

Rational bracket(const PositiveMatrix& z, int k, const std::vector<BracketArg>& args) {
  const int d = z.rows();
  std::vector<RatVec> rows;
  rows.reserve(d);
  for (const auto& a : args) {
    if (std::holds_alternative<int>(a)) {
      rows.push_back(z.column_twisted(k, std::get<int>(a)));
    } else if (std::holds_alternative<RatVec>(a)) {
      const auto& v = std::get<RatVec>(a);
      if (static_cast<int>(v.size()) != d) throw std::domain_error("bracket: vector length mismatch");
      rows.push_back(v);
    } else {
      const auto& ev = std::get<ExteriorVector>(a);
      if (ev.dim() != d) throw std::domain_error("bracket: exterior vector dimension mismatch");
      auto factors = decompose(ev);
      if (!factors) throw std::domain_error("bracket: non-decomposable exterior argument");
      for (auto& f : *factors) rows.push_back(std::move(f));
    }
  }
  if (static_cast<int>(rows.size()) != d) throw std::domain_error("bracket: stacked rows must equal k+m");
  RatMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = rows[r][c];
  return det(m);
}

ExteriorVector bar_line(const PositiveMatrix& z, int i, int j) {
  if (z.rows() != 4) throw std::domain_error("bar_line: requires a 4-row matrix (k=m=2)");
  const int n = z.cols();
  int in = ((i - 1) % n + n) % n + 1;
  int jn = ((j - 1) % n + n) % n + 1;
  if (in == jn) throw std::domain_error("bar_line: indices coincide modulo n");
  PositiveMatrix w = twist(z, 2, 2);
  return wedge(ExteriorVector::from_vector(w.column_twisted(2, i)),
               ExteriorVector::from_vector(w.column_twisted(2, j)));
}

std::vector<ExteriorVector> all_bar_lines(const PositiveMatrix& z) {
  if (z.rows() != 4) throw std::domain_error("all_bar_lines: requires a 4-row matrix (k=m=2)");
  PositiveMatrix w = twist(z, 2, 2);
  std::vector<ExteriorVector> lines;
  const int n = z.cols();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      lines.push_back(wedge(ExteriorVector::from_vector(w.matrix().column(i - 1)),
                            ExteriorVector::from_vector(w.matrix().column(j - 1))));
  return lines;
}

}  // namespace exc
