#pragma once

#include <cstdint>

#include "exc/exterior.hpp"
#include "exc/matrix.hpp"

namespace exc {

// True iff every maximal minor (columns ascending) is strictly positive.
// Requires rows <= cols. Always full enumeration; the sizes here are small.
bool is_positive(const RatMatrix& m);

// A (k+m) x n matrix with all maximal minors positive. Columns are the
// projective points Z_1..Z_n; twisted cyclic access wraps them with the sign
// (-1)^(k-1) per full period.
class PositiveMatrix {
 public:
  static PositiveMatrix from_matrix(RatMatrix m);  // validates positivity

  int rows() const { return data_.rows(); }
  int cols() const { return data_.cols(); }
  const RatMatrix& matrix() const { return data_; }

  // Column i (1-based). Indices outside [1, n] wrap with the twisted sign,
  // which depends on k so the caller supplies it.
  RatVec column_twisted(int k, int i) const;

 private:
  explicit PositiveMatrix(RatMatrix m) : data_(std::move(m)) {}
  RatMatrix data_;
};

// Rows 1, x, x^2, ... on strictly increasing nodes. Positive because every
// maximal minor is a Vandermonde determinant on ascending nodes.
PositiveMatrix vandermonde(const RatVec& nodes, int rows);

// Deterministic positive matrix off the Vandermonde stratum: draw distinct
// byte-size nodes u/256 from splitmix64, take the Vandermonde V = L*U, and
// return transpose(L) * D * (D^-1 U) with D the pivot diagonal. The positive
// diagonal times the unimodular factors keeps every maximal minor positive.
PositiveMatrix random_positive(int rows, int cols, std::uint64_t seed);

// Twist: column i of the result is the Hodge star of the wedge of columns
// i-m+1 .. i+k-1 of z (twisted cyclic access). Maps positive to positive;
// a non-positive result indicates a sign-convention bug and throws.
PositiveMatrix twist(const PositiveMatrix& z, int k, int m);

}  // namespace exc
