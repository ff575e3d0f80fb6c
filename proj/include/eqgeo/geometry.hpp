#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "cliques.hpp"
#include "f2.hpp"
#include "graph.hpp"
#include "sets.hpp"

// The point-line geometry P_m inside the even-weight hyperplane of F_2^n:
// points are the weight-2m vectors, lines are the XOR-closed triples
// {P_I, P_J, P_{I xor J}} with |I ∩ J| = m.  The collinearity graph Γ_m has
// an edge exactly where such a line exists.

namespace eqgeo {

inline constexpr int kMaxGeometryPoints = 4096;

class Geometry {
 public:
  Geometry(int n, int m) : n_(n), m_(m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n > 64) throw std::out_of_range("n must be <= 64");
    if (3 * m > n) throw std::invalid_argument("no lines exist when 3m > n");
    if (binom(n, 2 * m) > kMaxGeometryPoints)
      throw std::length_error("geometry exceeds the point cap");

    points_ = all_subsets(n, 2 * m);  // colex order
    int np = int(points_.size());
    if (n_ <= 16) {
      lut_.assign(size_t{1} << n_, -1);
      for (int i = 0; i < np; ++i) lut_[points_[i]] = i;
    } else {
      map_.reserve(points_.size());
      for (int i = 0; i < np; ++i) map_[points_[i]] = i;
    }

    adj_.assign(np, Bitset(np));
    for (int a = 0; a < np; ++a)
      for (int b = a + 1; b < np; ++b)
        if (popcount(points_[a] & points_[b]) == m) {
          adj_[a].set(b);
          adj_[b].set(a);
        }

    lines_through_.assign(np, {});
    for (int a = 0; a < np; ++a)
      adj_[a].for_each([&](int b) {
        if (b <= a) return;
        int c = index_of(points_[a] ^ points_[b]);
        if (c > b) {
          int li = int(lines_.size());
          lines_.push_back({a, b, c});
          lines_through_[a].push_back(li);
          lines_through_[b].push_back(li);
          lines_through_[c].push_back(li);
        }
      });
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int num_points() const { return int(points_.size()); }
  const std::vector<mask_t>& point_supports() const { return points_; }
  mask_t support(int idx) const { return points_.at(idx); }

  // -1 when the mask is not a point of the geometry
  int index_of(mask_t mask) const {
    if (n_ <= 16) return mask < lut_.size() ? lut_[mask] : -1;
    auto it = map_.find(mask);
    return it == map_.end() ? -1 : it->second;
  }

  bool adjacent(int a, int b) const { return a != b && adj_[a].test(b); }
  const Bitset& neighbors(int a) const { return adj_.at(a); }
  const std::vector<Bitset>& adjacency() const { return adj_; }
  int degree() const { return int(binom(2 * m_, m_) * binom(n_ - 2 * m_, m_)); }

  const std::vector<std::array<int, 3>>& lines() const { return lines_; }
  const std::vector<int>& lines_through(int p) const { return lines_through_.at(p); }
  std::uint64_t lines_per_point() const {
    return binom(2 * m_, m_) * binom(n_ - 2 * m_, m_) / 2;
  }

  // third point of the line through a and b, -1 if not collinear
  int third_point(int a, int b) const {
    if (!adjacent(a, b)) return -1;
    return index_of(points_[a] ^ points_[b]);
  }

 private:
  int n_, m_;
  std::vector<mask_t> points_;
  std::vector<int> lut_;
  std::unordered_map<mask_t, int> map_;
  std::vector<Bitset> adj_;
  std::vector<std::array<int, 3>> lines_;
  std::vector<std::vector<int>> lines_through_;
};

// A point of P_m collinear with both P_I and P_J, built exactly as in the
// diameter-2 argument: lowest-index choices make it deterministic.
inline mask_t common_neighbor_witness(const Geometry& g, mask_t I, mask_t J) {
  int n = g.n(), m = g.m();
  if (popcount(I) != 2 * m || popcount(J) != 2 * m)
    throw std::invalid_argument("witness inputs must be points of the geometry");
  if ((I | J) & ~full_mask(n)) throw std::out_of_range("support outside [1,n]");
  if (I == J) throw std::invalid_argument("witness inputs must be distinct");
  int inter = popcount(I & J);
  if (inter == m) return I ^ J;  // collinear: the third point of their line
  if (inter < m) {
    mask_t M = lowest_bits(I & ~J, m), N = lowest_bits(J & ~I, m);
    return M | N;
  }
  int t = inter - m;
  mask_t a1 = lowest_bits(I & J, t);
  mask_t a2 = lowest_bits(full_mask(n) & ~(I | J), t);
  mask_t a3 = lowest_bits(I & ~J, m - t);
  mask_t a4 = lowest_bits(J & ~I, m - t);
  return a1 | a2 | a3 | a4;
}

// ---- layered closure -------------------------------------------------------

// P̄_m: everything reachable as P ⊙ P' from distinct points of P_m; it is the
// union of the layers P_i, 1 <= i <= min{2m, n-2m}.
class ExtendedGeometry {
 public:
  ExtendedGeometry(int n, int m) : base_(n, m) {
    int top = std::min(2 * m, n - 2 * m);
    for (int i = 1; i <= top; ++i) layers_.push_back(all_subsets(n, 2 * i));
  }

  const Geometry& base() const { return base_; }
  int max_layer() const { return int(layers_.size()); }
  const std::vector<mask_t>& layer(int i) const { return layers_.at(i - 1); }  // 1-based

  bool in_closure(mask_t mask) const {
    int w = popcount(mask);
    return w >= 2 && w % 2 == 0 && w / 2 <= max_layer();
  }

  std::vector<mask_t> closure_points() const {
    std::vector<mask_t> all;
    for (const auto& l : layers_) all.insert(all.end(), l.begin(), l.end());
    return all;
  }

 private:
  Geometry base_;
  std::vector<std::vector<mask_t>> layers_;
};

// closed formula for the number of lines through a weight-2i point whose two
// remaining points both lie in P_m
inline std::uint64_t lambda_count(int n, int m, int i) {
  if (i < 1 || i > std::min(2 * m, n - 2 * m))
    throw std::invalid_argument("layer index out of range");
  return binom(2 * i, i) * binom(n - 2 * i, 2 * m - i) / 2;
}

// brute-force twin of lambda_count: enumerate the point pairs directly
inline std::uint64_t lambda_brute(const ExtendedGeometry& eg, mask_t X) {
  const Geometry& g = eg.base();
  if (!eg.in_closure(X)) throw std::invalid_argument("center must lie in the closure");
  std::uint64_t pairs = 0;
  for (mask_t I : g.point_supports()) {
    mask_t J = I ^ X;
    if (J != I && popcount(J) == 2 * g.m()) ++pairs;
  }
  return pairs / 2;
}

// ---- pencils and the ~ relation -------------------------------------------

// the pencil L_P: lines through a closure point P with both remaining points
// in P_m, stored as pairs of base-point indices
struct Pencil {
  mask_t center;
  std::vector<std::array<int, 2>> lines;
};

inline Pencil pencil(const ExtendedGeometry& eg, mask_t center) {
  const Geometry& g = eg.base();
  if (!eg.in_closure(center)) throw std::invalid_argument("center must lie in the closure");
  Pencil p{center, {}};
  const auto& pts = g.point_supports();
  for (int a = 0; a < int(pts.size()); ++a) {
    mask_t J = pts[a] ^ center;
    if (J == pts[a]) continue;
    int b = g.index_of(J);
    if (b > a) p.lines.push_back({a, b});
  }
  return p;
}

// two pencil lines are related when one of the cross pairs is collinear in
// P_m (all four endpoints are automatically distinct)
inline bool tilde_related(const Geometry& g, const std::array<int, 2>& l1,
                          const std::array<int, 2>& l2) {
  mask_t I = g.support(l1[0]), J = g.support(l1[1]);
  mask_t I2 = g.support(l2[0]), J2 = g.support(l2[1]);
  int m = g.m();
  return popcount(I & I2) == m || popcount(I & J2) == m ||
         popcount(J & I2) == m || popcount(J & J2) == m;
}

// connected components of the transitive closure of ~ on the pencil
inline std::vector<std::vector<int>> tilde_components(const Geometry& g, const Pencil& p) {
  int k = int(p.lines.size());
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = int(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v = 0; v < k; ++v)
        if (comp[v] < 0 && tilde_related(g, p.lines[u], p.lines[v])) {
          comp[v] = comp[s];
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// ---- perp operator ---------------------------------------------------------

// X^c: points collinear-or-equal to every point of X
inline Bitset perp(const Geometry& g, const Bitset& X) {
  int np = g.num_points();
  Bitset r(np);
  for (int i = 0; i < np; ++i) r.set(i);
  X.for_each([&](int p) {
    Bitset closed = g.neighbors(p);
    closed.set(p);
    r &= closed;
  });
  return r;
}

inline Bitset double_perp(const Geometry& g, const Bitset& X) { return perp(g, perp(g, X)); }

// ---- cliques and singular subspaces ----------------------------------------

enum class CliqueKind { line, singular_subspace, other };

struct CliqueReport {
  std::vector<int> members;
  CliqueKind kind;
  bool design_flag;  // exactly n members forming a symmetric 2-design
};

inline bool is_singular_set(const Geometry& g, const std::vector<int>& pts) {
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      int c = g.third_point(pts[a], pts[b]);
      if (c < 0 || !std::binary_search(pts.begin(), pts.end(), c)) return false;
    }
  return true;
}

inline bool is_symmetric_design(const Geometry& g, const std::vector<int>& pts) {
  if (int(pts.size()) != g.n()) return false;
  // constant block size, constant pairwise intersection, constant replication
  int lam = -1;
  for (size_t a = 0; a < pts.size(); ++a) {
    if (popcount(g.support(pts[a])) != 2 * g.m()) return false;
    for (size_t b = a + 1; b < pts.size(); ++b) {
      int x = popcount(g.support(pts[a]) & g.support(pts[b]));
      if (lam < 0) lam = x;
      if (x != lam) return false;
    }
  }
  int rep = -1;
  for (int i = 1; i <= g.n(); ++i) {
    int r = 0;
    for (int p : pts) r += mask_test(g.support(p), i);
    if (rep < 0) rep = r;
    if (r != rep) return false;
  }
  return true;
}

inline std::vector<CliqueReport> maximal_cliques(const Geometry& g) {
  std::vector<CliqueReport> out;
  for (auto& members : enumerate_maximal_cliques(g.adjacency())) {
    CliqueReport r;
    bool sing = is_singular_set(g, members);
    r.kind = !sing ? CliqueKind::other
                   : (members.size() == 3 ? CliqueKind::line : CliqueKind::singular_subspace);
    r.design_flag = is_symmetric_design(g, members);
    r.members = std::move(members);
    out.push_back(std::move(r));
  }
  return out;
}

// all inclusion-maximal singular subspaces, as sorted point-index sets
inline std::vector<std::vector<int>> maximal_singular_subspaces(const Geometry& g) {
  std::set<std::vector<int>> seen, maximal;
  std::vector<std::vector<int>> stack;
  for (int p = 0; p < g.num_points(); ++p) stack.push_back({p});
  while (!stack.empty()) {
    std::vector<int> s = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(s).second) continue;
    Bitset cand = perp(g, [&] {
      Bitset b(g.num_points());
      for (int p : s) b.set(p);
      return b;
    }());
    for (int p : s) cand.reset(p);
    if (cand.none()) {
      maximal.insert(s);
      continue;
    }
    cand.for_each([&](int p) {
      std::vector<int> bigger = s;
      bigger.push_back(p);
      for (int q : s) bigger.push_back(g.third_point(q, p));
      std::sort(bigger.begin(), bigger.end());
      stack.push_back(std::move(bigger));
    });
  }
  return {maximal.begin(), maximal.end()};
}

}  // namespace eqgeo
