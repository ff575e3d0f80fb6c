#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sets.hpp"

// GF(2) kernel: vectors of length n <= 64 packed into one machine word
// (coordinate i lives in bit i-1, so colex set order == numeric word order),
// and linear maps stored column-major.

namespace eqgeo {

class F2Vector {
 public:
  F2Vector(int n, mask_t bits) : n_(n), w_(bits) {
    if (bits & ~full_mask(n)) throw std::out_of_range("bits outside [1,n]");
  }
  explicit F2Vector(int n) : F2Vector(n, 0) {}

  static F2Vector unit(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("unit index out of [1,n]");
    return F2Vector(n, mask_t{1} << (i - 1));
  }
  static F2Vector ones(int n) { return F2Vector(n, full_mask(n)); }

  // text form: '0'/'1' per coordinate, leftmost char = coordinate 1
  static F2Vector parse(const std::string& s) {
    int n = int(s.size());
    F2Vector v(n);
    for (int i = 0; i < n; ++i) {
      if (s[i] == '1')
        v.w_ |= mask_t{1} << i;
      else if (s[i] != '0')
        throw std::invalid_argument("vector text must be 0/1 characters");
    }
    return v;
  }

  int length() const { return n_; }
  mask_t word() const { return w_; }
  bool bit(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("coordinate out of [1,n]");
    return mask_test(w_, i);
  }
  int weight() const { return popcount(w_); }
  bool is_zero() const { return w_ == 0; }
  std::vector<int> support() const { return mask_elems(w_); }

  friend F2Vector operator+(const F2Vector& a, const F2Vector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("length mismatch");
    return F2Vector(a.n_, a.w_ ^ b.w_);
  }
  friend F2Vector operator^(const F2Vector& a, const F2Vector& b) { return a + b; }
  bool operator==(const F2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const F2Vector& o) const { return w_ < o.w_; }

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if ((w_ >> i) & 1) s[i] = '1';
    return s;
  }

 private:
  int n_;
  mask_t w_;
};

inline F2Vector support_vector(const std::vector<int>& elems, int n) {
  return F2Vector(n, mask_of(elems, n));
}

inline int hamming(const F2Vector& u, const F2Vector& v) {
  if (u.length() != v.length()) throw std::invalid_argument("length mismatch");
  return popcount(u.word() ^ v.word());
}

inline int f2_rank(std::vector<mask_t> rows) {
  int r = 0;
  for (size_t c = 0; c < rows.size(); ++c) {
    // pick a pivot among remaining rows
    size_t p = r;
    while (p < rows.size() && rows[p] == 0) ++p;
    if (p == rows.size()) break;
    std::swap(rows[r], rows[p]);
    mask_t low = rows[r] & (~rows[r] + 1);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != size_t(r) && (rows[i] & low)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

class LinearMap {
 public:
  explicit LinearMap(std::vector<F2Vector> columns) : cols_(std::move(columns)) {
    if (cols_.empty()) throw std::invalid_argument("map needs at least one column");
    n_ = int(cols_.size());
    for (const auto& c : cols_)
      if (c.length() != n_) throw std::invalid_argument("columns must have length n");
  }

  static LinearMap identity(int n) {
    std::vector<F2Vector> cols;
    for (int i = 1; i <= n; ++i) cols.push_back(F2Vector::unit(n, i));
    return LinearMap(std::move(cols));
  }

  // perm[i-1] = image of coordinate i; e_i -> e_{perm[i-1]}
  static LinearMap permutation(const std::vector<int>& perm) {
    int n = int(perm.size());
    mask_t seen = 0;
    std::vector<F2Vector> cols;
    for (int i = 0; i < n; ++i) {
      if (perm[i] < 1 || perm[i] > n) throw std::out_of_range("permutation image out of [1,n]");
      if (mask_test(seen, perm[i])) throw std::invalid_argument("not a permutation");
      seen |= mask_t{1} << (perm[i] - 1);
      cols.push_back(F2Vector::unit(n, perm[i]));
    }
    return LinearMap(std::move(cols));
  }

  int dim() const { return n_; }
  const F2Vector& column(int i) const { return cols_.at(i); }  // 0-based

  F2Vector apply(const F2Vector& v) const {
    if (v.length() != n_) throw std::invalid_argument("dimension mismatch");
    mask_t acc = 0, w = v.word();
    while (w) {
      int b = std::countr_zero(w);
      acc ^= cols_[b].word();
      w &= w - 1;
    }
    return F2Vector(n_, acc);
  }

  // (this ∘ other): apply other first
  LinearMap compose(const LinearMap& other) const {
    if (other.n_ != n_) throw std::invalid_argument("dimension mismatch");
    std::vector<F2Vector> cols;
    cols.reserve(n_);
    for (int i = 0; i < n_; ++i) cols.push_back(apply(other.cols_[i]));
    return LinearMap(std::move(cols));
  }

  int rank() const {
    std::vector<mask_t> rows;
    rows.reserve(n_);
    for (const auto& c : cols_) rows.push_back(c.word());  // rank(A) == rank(A^T)
    return f2_rank(std::move(rows));
  }
  bool invertible() const { return rank() == n_; }

  LinearMap inverse() const {
    // Gauss-Jordan on [A | I], columns as rows of the transpose trick is
    // avoided: work on actual rows of A built from column words.
    std::vector<mask_t> a(n_, 0), inv(n_, 0);
    for (int c = 0; c < n_; ++c)
      for (int r = 0; r < n_; ++r)
        if ((cols_[c].word() >> r) & 1) a[r] |= mask_t{1} << c;
    for (int r = 0; r < n_; ++r) inv[r] = mask_t{1} << r;
    for (int c = 0; c < n_; ++c) {
      int p = -1;
      for (int r = c; r < n_; ++r)
        if ((a[r] >> c) & 1) { p = r; break; }
      if (p < 0) throw std::invalid_argument("map is singular");
      std::swap(a[c], a[p]);
      std::swap(inv[c], inv[p]);
      for (int r = 0; r < n_; ++r)
        if (r != c && ((a[r] >> c) & 1)) { a[r] ^= a[c]; inv[r] ^= inv[c]; }
    }
    std::vector<F2Vector> cols(n_, F2Vector(n_));
    for (int c = 0; c < n_; ++c) {
      mask_t w = 0;
      for (int r = 0; r < n_; ++r)
        if ((inv[r] >> c) & 1) w |= mask_t{1} << r;
      cols[c] = F2Vector(n_, w);
    }
    return LinearMap(std::move(cols));
  }

  bool operator==(const LinearMap& o) const { return n_ == o.n_ && cols_ == o.cols_; }

 private:
  int n_;
  std::vector<F2Vector> cols_;
};

inline F2Vector apply(const LinearMap& m, const F2Vector& v) { return m.apply(v); }

enum class SpecialMapKind { l, s, s_prime };

// l_i     : e_i -> e_[n], fixes the other basis vectors
// s_ij    : e_i -> e_{[n]\{i}}, e_j -> e_{[n]\{j}}, fixes the rest
// s'_ij   : e_i -> e_{[n]\{j}}, e_j -> e_{[n]\{i}}, fixes the rest
inline LinearMap make_special_map(SpecialMapKind kind, const std::vector<int>& idx, int n) {
  auto col_without = [n](int skip) { return F2Vector(n, full_mask(n) ^ (mask_t{1} << (skip - 1))); };
  std::vector<F2Vector> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(F2Vector::unit(n, i));
  if (kind == SpecialMapKind::l) {
    if (idx.size() != 1) throw std::invalid_argument("l-map takes one index");
    int i = idx[0];
    if (i < 1 || i > n) throw std::out_of_range("index out of [1,n]");
    cols[i - 1] = F2Vector::ones(n);
  } else {
    if (idx.size() != 2) throw std::invalid_argument("s-maps take two indices");
    int i = idx[0], j = idx[1];
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("index out of [1,n]");
    if (i == j) throw std::invalid_argument("s-map indices must differ");
    if (kind == SpecialMapKind::s) {
      cols[i - 1] = col_without(i);
      cols[j - 1] = col_without(j);
    } else {
      cols[i - 1] = col_without(j);
      cols[j - 1] = col_without(i);
    }
  }
  return LinearMap(std::move(cols));
}

// order of M under composition (throws if it exceeds the 2^n cap)
inline std::uint64_t map_order(const LinearMap& m) {
  LinearMap acc = m;
  LinearMap id = LinearMap::identity(m.dim());
  std::uint64_t ord = 1, cap = m.dim() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.dim());
  while (!(acc == id)) {
    acc = acc.compose(m);
    if (++ord > cap) throw std::runtime_error("map order exceeds 2^n cap");
  }
  return ord;
}

}  // namespace eqgeo
