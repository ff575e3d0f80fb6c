#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Fixed-length dynamic bitset used for adjacency rows and vertex sets.

namespace eqgeo {

class Bitset {
 public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {  // set difference
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // index of first set bit, or -1
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(int(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace eqgeo
