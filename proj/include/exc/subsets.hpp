#pragma once

#include <stdexcept>
#include <vector>

#include "exc/rational.hpp"

namespace exc {

// Strictly ascending tuple of 1-based indices. Used both for multi-indices
// into exterior powers and for ground-set labels of the wedge matroids.
using Subset = std::vector<int>;

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Subset subset_complement(const Subset& s, int n) {
  Subset c;
  c.reserve(n - s.size());
  size_t j = 0;
  for (int i = 1; i <= n; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
    } else {
      c.push_back(i);
    }
  }
  return c;
}

// Sign of the permutation that sorts the concatenation (a, b) of two disjoint
// ascending tuples; the shuffle sign in e_a wedge e_b = sign * e_{sorted}.
inline int shuffle_sign(const Subset& a, const Subset& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// epsilon(I, I^c): sign of the permutation (I, I^c) of {1..n}.
inline int eps_complement(const Subset& s, int n) {
  return shuffle_sign(s, subset_complement(s, n));
}

inline bool subsets_disjoint(const Subset& a, const Subset& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

inline Subset subset_union_sorted(const Subset& a, const Subset& b) {
  Subset u;
  u.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j]))
      u.push_back(a[i++]);
    else
      u.push_back(b[j++]);
  }
  return u;
}

inline void validate_subset(const Subset& s, int n) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw std::domain_error("subset index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::domain_error("subset not strictly ascending");
  }
}

}  // namespace exc
