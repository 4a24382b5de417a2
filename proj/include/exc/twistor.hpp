#pragma once

#include <variant>

#include "exc/zmatrix.hpp"

namespace exc {

// C(k+m,k) x C(n,k) matrix whose column J holds the coefficients of the
// wedge of columns Z_{j1} .. Z_{jk}; rows and columns in lex subset order.
RatMatrix wedge_power_matrix(const PositiveMatrix& z, int k);

// One bracket argument: a (possibly twisted) column label, an explicit
// vector, or a decomposable exterior vector contributing its factors.
using BracketArg = std::variant<int, RatVec, ExteriorVector>;

// Determinant of the matrix stacking the arguments' rows; the total number
// of stacked rows must equal k+m.
Rational bracket(const PositiveMatrix& z, int k, const std::vector<BracketArg>& args);

// The line W_i wedge W_j in the second exterior power of R^4, where W is the
// twist of z. Defined for the k=m=2 setting (4 rows).
ExteriorVector bar_line(const PositiveMatrix& z, int i, int j);

// All bar lines W_i wedge W_j for 1 <= i < j <= n, computed from one twist.
std::vector<ExteriorVector> all_bar_lines(const PositiveMatrix& z);

}  // namespace exc
