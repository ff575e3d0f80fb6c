#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"
#include "geometry.hpp"
#include "sets.hpp"

// Binary linear codes given by generator matrices, their equidistance
// structure (every generator of a t-equidistant [n,k] code carries each
// nonzero column of F_2^k exactly s times plus r zero columns, with
// n = (2^k - 1)s + r and t = 2^{k-1} s), and the bridge between singular
// subspaces of P_m and 2m-equidistant codes.

namespace eqgeo {

inline constexpr int kMaxCodeDim = 20;

class Code {
 public:
  // rows must be linearly independent; stored in reduced row-echelon form
  Code(int n, std::vector<mask_t> rows) : n_(n) {
    if (n < 1 || n > 64) throw std::out_of_range("code length must be in [1,64]");
    for (mask_t r : rows)
      if (r & ~full_mask(n)) throw std::out_of_range("generator row wider than n");
    size_t given = rows.size();
    rows_ = rref(std::move(rows));
    if (rows_.size() != given) throw std::invalid_argument("generator rows must be independent");
    k_ = int(rows_.size());
    if (k_ < 1) throw std::invalid_argument("code must have dimension >= 1");
  }

  // reduces a spanning set, dropping dependent vectors
  static Code from_span(int n, std::vector<mask_t> vectors) {
    auto rows = rref(std::move(vectors));
    if (rows.empty()) throw std::invalid_argument("span is trivial");
    return Code(n, std::move(rows));
  }

  // k lines of '0'/'1' text, leftmost char = coordinate 1
  static Code parse(const std::vector<std::string>& lines) {
    if (lines.empty()) throw std::invalid_argument("empty generator");
    int n = int(lines[0].size());
    std::vector<mask_t> rows;
    for (const auto& s : lines) {
      if (int(s.size()) != n) throw std::invalid_argument("ragged generator rows");
      rows.push_back(F2Vector::parse(s).word());
    }
    return Code(n, std::move(rows));
  }

  int length() const { return n_; }
  int dim() const { return k_; }
  const std::vector<mask_t>& generator() const { return rows_; }

  std::vector<mask_t> nonzero_codewords() const {
    if (k_ > kMaxCodeDim) throw std::length_error("codeword enumeration capped at k <= 20");
    std::vector<mask_t> cw(size_t{1} << k_, 0);
    for (size_t msk = 1; msk < cw.size(); ++msk)
      cw[msk] = cw[msk & (msk - 1)] ^ rows_[std::countr_zero(msk)];
    return {cw.begin() + 1, cw.end()};
  }

  // column j (1-based) of the canonical generator, as a k-bit value
  unsigned column(int j) const {
    unsigned c = 0;
    for (int i = 0; i < k_; ++i)
      if (mask_test(rows_[i], j)) c |= 1u << i;
    return c;
  }

  std::vector<std::string> to_text() const {
    std::vector<std::string> out;
    for (mask_t r : rows_) out.push_back(F2Vector(n_, r).to_string());
    return out;
  }

  bool operator==(const Code& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  static std::vector<mask_t> rref(std::vector<mask_t> rows) {
    size_t r = 0;
    for (int c = 0; c < 64 && r < rows.size(); ++c) {
      mask_t bit = mask_t{1} << c;
      size_t p = r;
      while (p < rows.size() && !(rows[p] & bit)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[r], rows[p]);
      for (size_t i = 0; i < rows.size(); ++i)
        if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
      ++r;
    }
    rows.resize(r);
    std::sort(rows.begin(), rows.end(), [](mask_t a, mask_t b) {
      return (a & (~a + 1)) < (b & (~b + 1));  // by pivot column
    });
    return rows;
  }

  int n_, k_;
  std::vector<mask_t> rows_;
};

// the common weight t when all nonzero codewords agree, nullopt otherwise
inline std::optional<int> is_equidistant(const Code& c) {
  auto words = c.nonzero_codewords();
  int t = popcount(words[0]);
  for (mask_t w : words)
    if (popcount(w) != t) return std::nullopt;
  return t;
}

struct EquidistantProfile {
  int k, s, r, t;
  bool operator==(const EquidistantProfile&) const = default;
};

// column-multiset decomposition of an equidistant code
inline EquidistantProfile bonis_decompose(const Code& c) {
  auto t = is_equidistant(c);
  if (!t) throw std::invalid_argument("code is not equidistant");
  int k = c.dim(), n = c.length();
  std::vector<int> mult(size_t{1} << k, 0);
  for (int j = 1; j <= n; ++j) ++mult[c.column(j)];
  int r = mult[0], s = mult[1];
  for (size_t v = 1; v < mult.size(); ++v)
    if (mult[v] != s)
      throw std::logic_error("equidistant code with uneven column multiset");
  if (n != ((1 << k) - 1) * s + r || *t != (1 << (k - 1)) * s)
    throw std::logic_error("column multiset inconsistent with (n,t)");
  return {k, s, r, *t};
}

// canonical generator: every nonzero column of F_2^k repeated s times in
// increasing value order, then r zero columns
inline Code replicated_simplex(int k, int s, int r) {
  if (k < 1 || k > kMaxCodeDim || s < 1 || r < 0) throw std::invalid_argument("bad profile");
  int n = ((1 << k) - 1) * s + r;
  if (n > 64) throw std::out_of_range("profile needs length > 64");
  std::vector<mask_t> rows(k, 0);
  int j = 0;
  for (unsigned v = 1; v < (1u << k); ++v)
    for (int rep = 0; rep < s; ++rep, ++j)
      for (int i = 0; i < k; ++i)
        if ((v >> i) & 1) rows[i] |= mask_t{1} << j;
  return Code(n, std::move(rows));
}

// greatest k admitting a k-dimensional t-equidistant code of length n
inline int max_equidistant_dim(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("n and t must be positive");
  int best = 0;
  for (int k = 1; k <= kMaxCodeDim; ++k) {
    std::int64_t den = std::int64_t{1} << (k - 1);
    if (t % den) continue;
    std::int64_t s = t / den;
    if (((std::int64_t{1} << k) - 1) * s <= n) best = k;
  }
  return best;
}

// sorted column multiset; equal for equivalent equidistant codes
inline std::vector<unsigned> column_fingerprint(const Code& c) {
  std::vector<unsigned> cols;
  for (int j = 1; j <= c.length(); ++j) cols.push_back(c.column(j));
  std::sort(cols.begin(), cols.end());
  return cols;
}

// ---- bridge between singular subspaces and codes ---------------------------

// span of the supports of a pairwise-collinear, ⊙-closed point set
inline Code code_from_subspace(const Geometry& g, const std::vector<int>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  std::vector<int> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (!is_singular_set(g, sorted))
    throw std::invalid_argument("point set is not a singular subspace");
  std::vector<mask_t> vecs;
  for (int p : sorted) vecs.push_back(g.support(p));
  Code c = Code::from_span(g.n(), std::move(vecs));
  if ((size_t{1} << c.dim()) - 1 != sorted.size())
    throw std::logic_error("singular subspace of unexpected span size");
  return c;
}

// nonzero codewords read back as points of the geometry
inline std::vector<int> subspace_from_code(const Geometry& g, const Code& c) {
  if (c.length() != g.n()) throw std::invalid_argument("length mismatch with geometry");
  std::vector<int> pts;
  for (mask_t w : c.nonzero_codewords()) {
    int idx = g.index_of(w);
    if (idx < 0) throw std::invalid_argument("codeword is not a point of the geometry");
    pts.push_back(idx);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace eqgeo
