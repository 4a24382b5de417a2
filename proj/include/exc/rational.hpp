#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exc {

// Exact scalars. mpq_class keeps gcd(|num|, den) = 1 and den > 0 once
// canonicalized; every constructor below canonicalizes, so Rational values
// are always in lowest terms with positive denominator and zero is 0/1.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Int(num), Int(den));
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

// Serialized form is "p/q", or just "p" when q = 1.
inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(Int(s, 10), 1);
      q.canonicalize();
      return q;
    }
    Int num(s.substr(0, slash), 10);
    Int den(s.substr(slash + 1), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("rational_from_string: malformed rational '" + s + "'");
  }
}

// Deterministic 64-bit generator (splitmix64). All randomness in the project
// flows through this so that a seed pins every downstream byte.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Scale a rational vector to the unique coprime integer vector with the same
// direction (positive scalar multiple). Zero vectors stay zero.
inline IntVec primitive_int_vector(const RatVec& v) {
  Int lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

inline IntVec primitive_int_vector(IntVec w) {
  Int g = 0;
  for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

// Projective representative: primitive and first nonzero entry positive.
// Used when comparing sets of projective points, never for cone rays.
inline IntVec projective_canonical(IntVec w) {
  w = primitive_int_vector(std::move(w));
  for (const auto& x : w) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
  }
  return w;
}

inline bool is_zero_vector(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace exc
