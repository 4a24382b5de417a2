#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exc/matrix.hpp"
#include "exc/subsets.hpp"

namespace exc {

// Element of the k-th exterior power of R^d with exact coefficients, indexed
// by ascending k-subsets of {1..d}. Zero coefficients are never stored.
class ExteriorVector {
 public:
  ExteriorVector() : degree_(0), dim_(0) {}
  ExteriorVector(int degree, int dim) : degree_(degree), dim_(dim) {}

  static ExteriorVector basis(int dim, const Subset& indices);
  static ExteriorVector from_vector(const RatVec& v);  // degree 1

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Subset, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Subset& s) const;

  void add_term(const Subset& s, const Rational& c);

  ExteriorVector operator+(const ExteriorVector& o) const;
  ExteriorVector operator-(const ExteriorVector& o) const;
  ExteriorVector operator*(const Rational& s) const;
  bool operator==(const ExteriorVector& o) const {
    return degree_ == o.degree_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
  }

  // Coefficients in the lex basis order, length C(d, k).
  RatVec dense() const;
  static ExteriorVector from_dense(int degree, int dim, const RatVec& v);

 private:
  int degree_, dim_;
  std::map<Subset, Rational> coeffs_;
};

ExteriorVector wedge(const ExteriorVector& u, const ExteriorVector& v);

// Coefficient B in u wedge v = B * e_{1..d}; requires deg u + deg v = d.
Rational top_pair(const ExteriorVector& u, const ExteriorVector& v);

// Star with the convention e_I wedge *(e_I) = e_{1..d}.
ExteriorVector hodge_star(const ExteriorVector& u);

// Kernel of v -> v wedge h. h is decomposable iff this space has dimension
// deg(h); on success the factors satisfy w_1 wedge ... wedge w_m = h exactly.
std::optional<std::vector<RatVec>> decompose(const ExteriorVector& h);

// Geometric intersection of decomposable a and b with deg a + deg b >= d,
// expanded over the factors of a. Throws on non-decomposable input.
ExteriorVector meet(const ExteriorVector& a, const ExteriorVector& b);

// Same expansion run over the factors of b; agrees with meet up to nothing
// (both compute the identical element), kept separate for the property test.
ExteriorVector meet_second_expansion(const ExteriorVector& a, const ExteriorVector& b);

// Wedge of a list of degree-1 vectors.
ExteriorVector wedge_all(const std::vector<RatVec>& vecs, int dim);

// Degree-m exterior vector N with top_pair(x, N) = f(x) for the linear
// functional f given by its coefficients in the lex degree-k basis.
ExteriorVector functional_to_exterior(const RatVec& f, int k, int dim);

}  // namespace exc
