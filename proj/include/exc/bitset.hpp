#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace exc {

// Fixed-width bitset sized at run time; used for facet/ray incidence masks.
class Bitset {
 public:
  Bitset() : size_(0) {}
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(size_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator<(const Bitset& o) const { return words_ < o.words_; }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  int size_;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace exc
