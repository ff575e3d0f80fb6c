#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Small helpers shared by every module: subsets of [n] packed into a 64-bit
// word (element i <-> bit i-1), the {a,b,c} text form, and binomials.

namespace eqgeo {

using mask_t = std::uint64_t;

inline mask_t full_mask(int n) {
  if (n < 1 || n > 64) throw std::out_of_range("ground set size must be in [1,64]");
  return n == 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

inline int popcount(mask_t m) { return std::popcount(m); }

inline bool mask_test(mask_t m, int i) { return (m >> (i - 1)) & 1; }  // 1-based

inline mask_t mask_of(const std::vector<int>& elems, int n) {
  mask_t m = 0;
  for (int e : elems) {
    if (e < 1 || e > n) throw std::out_of_range("set element out of [1,n]");
    if (mask_test(m, e)) throw std::invalid_argument("repeated set element");
    m |= mask_t{1} << (e - 1);
  }
  return m;
}

inline std::vector<int> mask_elems(mask_t m) {
  std::vector<int> v;
  while (m) {
    int b = std::countr_zero(m);
    v.push_back(b + 1);
    m &= m - 1;
  }
  return v;
}

// lowest k elements of a mask; throws if fewer are available
inline mask_t lowest_bits(mask_t m, int k) {
  mask_t r = 0;
  for (int i = 0; i < k; ++i) {
    if (!m) throw std::invalid_argument("not enough elements to pick from");
    mask_t low = m & (~m + 1);
    r |= low;
    m ^= low;
  }
  return r;
}

inline std::string set_to_string(mask_t m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elems(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

// parses "{1,3,5}" or "1,3,5"
inline mask_t parse_set(const std::string& text, int n) {
  std::vector<int> elems;
  std::string num;
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ') continue;
    if (c == ',') {
      if (num.empty()) throw std::invalid_argument("malformed set literal");
      elems.push_back(std::stoi(num));
      num.clear();
    } else if (c >= '0' && c <= '9') {
      num += c;
    } else {
      throw std::invalid_argument("malformed set literal");
    }
  }
  if (!num.empty()) elems.push_back(std::stoi(num));
  return mask_of(elems, n);
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// next k-subset word in colexicographic order (Gosper's hack)
inline mask_t next_subset_word(mask_t v) {
  mask_t c = v & (~v + 1), r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// all k-subsets of [n] in colex order == increasing word order
inline std::vector<mask_t> all_subsets(int n, int k) {
  std::vector<mask_t> out;
  if (k == 0) return {0};
  if (k > n) return out;
  out.reserve(binom(n, k));
  mask_t v = (mask_t{1} << k) - 1, top = full_mask(n);
  while (v <= top) {
    out.push_back(v);
    if (v == (top ^ ((mask_t{1} << (n - k)) - 1))) break;  // last subset
    v = next_subset_word(v);
  }
  return out;
}

}  // namespace eqgeo
