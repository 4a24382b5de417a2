#pragma once

#include <map>
#include <string>
#include <vector>

#include "exc/rational.hpp"

namespace exc {

// Exponent vectors compare in graded lexicographic order, which fixes a
// deterministic term order for printing and iteration.
struct GrlexLess {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // within a degree, lex-descending leading variable first
  }
};

enum class SignPattern { ALL_POSITIVE, ALL_NEGATIVE, MIXED, ZERO };

// Sparse multivariate polynomial over Rational with a fixed variable list.
// No zero coefficients are ever stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, int index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<std::vector<unsigned>, Rational, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Rational evaluate(const RatVec& point) const;
  std::string to_string() const;

  void add_term(const std::vector<unsigned>& expo, const Rational& coeff);

 private:
  void check_compatible(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<std::vector<unsigned>, Rational, GrlexLess> terms_;
};

// Exact symbolic determinant by expansion along the first row with minors
// memoized on column subsets.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

SignPattern coefficient_sign_pattern(const MultiPoly& p);

}  // namespace exc
