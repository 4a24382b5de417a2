#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "exc/rational.hpp"

namespace exc {

// Dense exact rational matrix, row major. Small sizes throughout (at most a
// few dozen rows/columns), so no sparsity or blocking.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_; }

  RatVec column(int c) const;
  RatVec row(int r) const;

  // Submatrix with the given (0-based) row and column selections.
  RatMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

// Exact determinant by fraction-free Bareiss elimination. Square input only.
Rational det(const RatMatrix& m);

// Exact rank by fraction-free Gaussian elimination.
int rank(const RatMatrix& m);

// Rows form a basis of the right kernel {x : m x = 0}; (cols - rank) rows.
RatMatrix kernel_basis(const RatMatrix& m);

// Integer variants used by the cone and matroid kernels, where all data has
// been cleared to primitive integer vectors.
Int det_int(std::vector<IntVec> rows);
int rank_int(std::vector<IntVec> rows);

// Incremental rank oracle: feed columns one at a time, each push reports
// whether the column enlarged the span. Pop undoes the most recent push.
class RankEngine {
 public:
  explicit RankEngine(int dim) : dim_(dim) {}

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Returns true if v was independent of the current span (rank grew).
  bool push(const RatVec& v);
  void pop();

 private:
  struct Step {
    bool grew;
    RatVec reduced;  // only meaningful when grew
    int pivot_col;
  };
  int dim_;
  std::vector<Step> history_;
  std::vector<std::pair<int, RatVec>> pivots_;  // (pivot column, reduced vector)
};

}  // namespace exc
