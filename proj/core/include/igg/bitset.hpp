#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace igg {

// Fixed-size bitset sized at runtime. Membership vectors for subgroups and
// adjacency rows both use it.
class Bitset {
public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  int words() const { return (int)w_.size(); }

  void set(int i) { w_[i >> 6] |= (uint64_t)1 << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~((uint64_t)1 << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  // popcount of the intersection
  int and_count(const Bitset& o) const {
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Lexicographic order on the sorted list of set positions, for sets of
  // equal cardinality: the set owning the lowest differing bit comes first.
  bool lex_less(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] ^ o.w_[k];
      if (d) return w_[k] & (d & -d);
    }
    return false;
  }

  int lowest_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (int)(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  // lowest bit set in *this but not in o, -1 if none
  int lowest_diff(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t d = w_[k] & ~o.w_[k];
      if (d) return (int)(k * 64 + std::countr_zero(d));
    }
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f((int)(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= (size_t)w;
      h *= 1099511628211ull;
    }
    return h;
  }

  const std::vector<uint64_t>& raw() const { return w_; }

private:
  int n_;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace igg
