#include "exc/multipoly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace exc {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(std::vector<unsigned>(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
  MultiPoly p(std::move(vars));
  std::vector<unsigned> e(p.vars_.size(), 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::domain_error("MultiPoly: mismatched variable lists");
}

void MultiPoly::add_term(const std::vector<unsigned>& expo, const Rational& coeff) {
  if (expo.size() != vars_.size()) throw std::domain_error("MultiPoly: exponent arity mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<unsigned> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Rational MultiPoly::evaluate(const RatVec& point) const {
  if (point.size() != vars_.size()) throw std::domain_error("MultiPoly: evaluation arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
    total += t;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += c > 0 ? " + " : " - ";
    if (first && c < 0) out += "-";
    Rational a = abs(c);
    bool has_var = false;
    for (unsigned x : e)
      if (x) has_var = true;
    if (a != 1 || !has_var) out += rational_to_string(a);
    bool started = a != 1 || !has_var;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (started) out += "*";
      out += vars_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      started = true;
    }
    first = false;
  }
  return out;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::domain_error("poly_det: matrix not square");
  if (n == 0) throw std::domain_error("poly_det: empty matrix");
  if (n > 31) throw std::domain_error("poly_det: matrix too large");
  const auto& vars = m[0][0].variables();
  for (const auto& row : m)
    for (const auto& p : row)
      if (p.variables() != vars) throw std::domain_error("poly_det: mismatched variable lists");
  unsigned full = (1u << n) - 1;
  // Expansion along successive rows; the minor's row is determined by the
  // popcount of its column mask, so the memo is keyed on the mask alone.
  struct Rec {
    const std::vector<std::vector<MultiPoly>>& m;
    std::unordered_map<unsigned, MultiPoly> memo;
    const std::vector<std::string>& vars;
    int n;
    MultiPoly run(unsigned mask) {
      if (mask == 0) return MultiPoly::constant(vars, Rational(1));
      auto it = memo.find(mask);
      if (it != memo.end()) return it->second;
      int row = n - __builtin_popcount(mask);
      MultiPoly acc(vars);
      int sign = 1;
      for (int c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        if (!m[row][c].is_zero()) {
          MultiPoly term = m[row][c] * run(mask & ~(1u << c));
          acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
      }
      memo.emplace(mask, acc);
      return acc;
    }
  } rec{m, {}, vars, n};
  return rec.run(full);
}

SignPattern coefficient_sign_pattern(const MultiPoly& p) {
  if (p.is_zero()) return SignPattern::ZERO;
  bool pos = false, neg = false;
  for (const auto& [e, c] : p.terms()) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && neg) return SignPattern::MIXED;
  return pos ? SignPattern::ALL_POSITIVE : SignPattern::ALL_NEGATIVE;
}

}  // namespace exc
