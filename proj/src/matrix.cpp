#include "exc/matrix.hpp"

#include <algorithm>

namespace exc {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::domain_error("RatMatrix: ragged initializer");
    for (long x : r) e_.emplace_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::domain_error("RatMatrix: dimension mismatch in product");
  RatMatrix p(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c) p.at(r, c) += a * other.at(k, c);
    }
  return p;
}

RatVec RatMatrix::column(int c) const {
  RatVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatVec RatMatrix::row(int r) const {
  RatVec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RatMatrix RatMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) s.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
  return s;
}

bool RatMatrix::is_zero() const {
  for (const auto& q : e_)
    if (q != 0) return false;
  return true;
}

namespace {

// Clear denominators row by row; returns the integer matrix and the product
// of the scaling factors so callers can undo the scaling exactly.
std::vector<IntVec> to_int_rows(const RatMatrix& m, Rational* scale = nullptr) {
  std::vector<IntVec> rows(m.rows());
  Rational total = 1;
  for (int r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    rows[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    total *= make_rational(l, 1);
  }
  if (scale) *scale = total;
  return rows;
}

}  // namespace

Int det_int(std::vector<IntVec> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        a[r][c] = a[k][k] * a[r][c] - a[r][k] * a[k][c];
        // Bareiss: division by the previous pivot is exact.
        if (prev != 1) a[r][c] /= prev;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int rank_int(std::vector<IntVec> a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[rank], a[p]);
    for (int r = rank + 1; r < rows; ++r) {
      // Bareiss: every row below is rescaled, even where the eliminated
      // entry is already zero, or later exact divisions fail.
      for (int c = col + 1; c < cols; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        if (prev != 1) a[r][c] /= prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("det: matrix not square");
  if (m.rows() == 0) return Rational(1);
  Rational scale;
  auto rows = to_int_rows(m, &scale);
  Rational d(det_int(std::move(rows)));
  return d / scale;
}

int rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rank_int(to_int_rows(m));
}

RatMatrix kernel_basis(const RatMatrix& m) {
  const int n = m.cols();
  // Reduced row echelon form over the rationals.
  std::vector<RatVec> a(m.rows());
  for (int r = 0; r < m.rows(); ++r) a[r] = m.row(r);
  std::vector<int> pivot_col;
  int lead = 0;
  for (int col = 0; col < n && lead < static_cast<int>(a.size()); ++col) {
    int p = -1;
    for (int r = lead; r < static_cast<int>(a.size()); ++r)
      if (a[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[lead], a[p]);
    Rational inv = a[lead][col];
    for (int c = 0; c < n; ++c) a[lead][c] /= inv;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == lead || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  RatMatrix basis(n - static_cast<int>(pivot_col.size()), n);
  int out = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) basis.at(out, pivot_col[pr]) = -a[pr][free];
    ++out;
  }
  return basis;
}

bool RankEngine::push(const RatVec& v) {
  RatVec w = v;
  for (const auto& [col, pv] : pivots_) {
    if (w[col] == 0) continue;
    Rational f = w[col] / pv[col];
    for (int c = 0; c < dim_; ++c) w[c] -= f * pv[c];
  }
  int pc = -1;
  for (int c = 0; c < dim_; ++c)
    if (w[c] != 0) {
      pc = c;
      break;
    }
  if (pc < 0) {
    history_.push_back({false, {}, -1});
    return false;
  }
  pivots_.emplace_back(pc, w);
  history_.push_back({true, std::move(w), pc});
  return true;
}

void RankEngine::pop() {
  if (history_.empty()) throw std::logic_error("RankEngine: pop on empty history");
  if (history_.back().grew) pivots_.pop_back();
  history_.pop_back();
}

}  // namespace exc
