#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bitset.hpp"
#include "graph.hpp"
#include "sets.hpp"

// Generalised Johnson graphs J(n,t,i): vertices are the t-subsets of [n],
// edges join subsets meeting in exactly i elements.  J(n,t) = J(n,t,t-1).

namespace eqgeo {

class JohnsonGraph {
 public:
  JohnsonGraph(int n, int t, int i) : n_(n), t_(t), i_(i) {
    if (!(1 < t && t < n)) throw std::invalid_argument("need 1 < t < n");
    if (i < std::max(0, 2 * t - n) || i >= t) throw std::invalid_argument("i out of window");
    // i == 0 with n == 2t is the perfect-matching boundary case; it is
    // buildable but disconnected (a disjoint union of K_2's).
    if (binom(n, t) > kMaxJohnsonVertices) throw std::length_error("johnson graph too large");
    verts_ = all_subsets(n, t);
    int nv = int(verts_.size());
    adj_.assign(nv, Bitset(nv));
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        if (popcount(verts_[a] & verts_[b]) == i) {
          adj_[a].set(b);
          adj_[b].set(a);
        }
  }

  static constexpr int kMaxJohnsonVertices = 4096;

  int n() const { return n_; }
  int t() const { return t_; }
  int i() const { return i_; }
  int num_vertices() const { return int(verts_.size()); }
  const std::vector<mask_t>& vertices() const { return verts_; }
  const std::vector<Bitset>& adjacency() const { return adj_; }

  int index_of(mask_t v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    return (it != verts_.end() && *it == v) ? int(it - verts_.begin()) : -1;
  }
  bool adjacent_masks(mask_t a, mask_t b) const {
    return a != b && popcount(a & b) == i_;
  }
  int degree() const { return int(binom(t_, i_) * binom(n_ - t_, t_ - i_)); }
  bool connected() const { return graph_connected(adj_); }

 private:
  int n_, t_, i_;
  std::vector<mask_t> verts_;
  std::vector<Bitset> adj_;
};

namespace detail {

// walk X -> Y in J(n,t): swap the lowest out-element for the lowest
// in-element until the sets agree (consecutive sets meet in t-1 elements)
inline std::vector<mask_t> johnson_walk(mask_t X, mask_t Y) {
  std::vector<mask_t> w{X};
  mask_t cur = X;
  while (cur != Y) {
    mask_t out = lowest_bits(cur & ~Y, 1), in = lowest_bits(Y & ~cur, 1);
    cur = (cur ^ out) | in;
    w.push_back(cur);
  }
  return w;
}

// middle vertex joining Johnson-adjacent X,Y inside J(n,t,i) for 0 < i < t-1:
// Z = {a,b} ∪ A ∪ B with X\Y={a}, Y\X={b}, A the lowest i-1 of X∩Y and B the
// lowest t-i-1 elements outside X∪Y
inline mask_t middle_vertex(int n, int t, int i, mask_t X, mask_t Y) {
  mask_t a = X & ~Y, b = Y & ~X;
  mask_t A = lowest_bits(X & Y, i - 1);
  mask_t B = lowest_bits(full_mask(n) & ~(X | Y), t - i - 1);
  return a | b | A | B;
}

}  // namespace detail

// path from X to Y in J(n,t,i); prefers the constructive recipe, BFS for the
// Kneser case i == 0
inline std::vector<mask_t> connectivity_path(const JohnsonGraph& jg, mask_t X, mask_t Y) {
  int n = jg.n(), t = jg.t(), i = jg.i();
  if (popcount(X) != t || popcount(Y) != t || (X | Y) & ~full_mask(n))
    throw std::invalid_argument("endpoints must be t-subsets of [1,n]");
  if (X == Y) return {X};
  if (jg.adjacent_masks(X, Y)) return {X, Y};
  if (i == 0) {
    auto dist = bfs_distances(jg.adjacency(), jg.index_of(X));
    int y = jg.index_of(Y);
    if (dist[y] < 0) throw std::runtime_error("no path: endpoints in different components");
    std::vector<mask_t> path{Y};
    int cur = y;
    while (dist[cur] > 0) {
      int next = cur;
      jg.adjacency()[cur].for_each([&](int v) {
        if (dist[v] == dist[cur] - 1 && next == cur) next = v;
      });
      cur = next;
      path.push_back(jg.vertices()[cur]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
  std::vector<mask_t> path;
  auto walk = detail::johnson_walk(X, Y);
  for (size_t s = 0; s + 1 < walk.size(); ++s) {
    path.push_back(walk[s]);
    if (i != t - 1) path.push_back(detail::middle_vertex(n, t, i, walk[s], walk[s + 1]));
  }
  path.push_back(walk.back());
  return path;
}

// maximal cliques of J(n,t): stars (all t-subsets through a (t-1)-set) and
// tops (all t-subsets inside a (t+1)-set); needs 1 < t < n-1
struct StarsTops {
  std::vector<std::vector<mask_t>> stars, tops;
};

inline StarsTops star_top_cliques(int n, int t) {
  if (!(1 < t && t < n - 1)) throw std::invalid_argument("need 1 < t < n-1");
  StarsTops st;
  for (mask_t I : all_subsets(n, t - 1)) {
    std::vector<mask_t> clique;
    for (int e = 1; e <= n; ++e)
      if (!mask_test(I, e)) clique.push_back(I | (mask_t{1} << (e - 1)));
    std::sort(clique.begin(), clique.end());
    st.stars.push_back(std::move(clique));
  }
  for (mask_t J : all_subsets(n, t + 1)) {
    std::vector<mask_t> clique;
    for (int e = 1; e <= n; ++e)
      if (mask_test(J, e)) clique.push_back(J ^ (mask_t{1} << (e - 1)));
    std::sort(clique.begin(), clique.end());
    st.tops.push_back(std::move(clique));
  }
  return st;
}

// Given an injective map of the 2-subsets of [m] into the 2-subsets of [n]
// that sends tops to tops and stars into stars, recover the inducing
// injection [m] -> [n]; nullopt when the image structure does not fit.
inline std::optional<std::vector<int>> recover_injection(
    int m, int n, const std::vector<std::pair<mask_t, mask_t>>& pair_images) {
  if (m < 3) throw std::invalid_argument("need m >= 3 to separate stars");
  std::vector<mask_t> image_of(size_t{1} << m, 0);
  for (auto [src, dst] : pair_images) image_of[src] = dst;
  std::vector<int> inj(m + 1, 0);
  for (int a = 1; a <= m; ++a) {
    // intersect the images of two pairs through a to isolate the image of a
    int b1 = a == 1 ? 2 : 1;
    int b2 = (a == 1 || a == 2) ? 3 : 2;
    mask_t p1 = image_of[(mask_t{1} << (a - 1)) | (mask_t{1} << (b1 - 1))];
    mask_t p2 = image_of[(mask_t{1} << (a - 1)) | (mask_t{1} << (b2 - 1))];
    mask_t common = p1 & p2;
    if (popcount(common) != 1) return std::nullopt;
    inj[a] = mask_elems(common)[0];
  }
  // the recovered injection must reproduce every pair image
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      mask_t src = (mask_t{1} << (a - 1)) | (mask_t{1} << (b - 1));
      mask_t want = (mask_t{1} << (inj[a] - 1)) | (mask_t{1} << (inj[b] - 1));
      if (inj[a] == inj[b] || inj[a] < 1 || inj[a] > n || image_of[src] != want)
        return std::nullopt;
    }
  return std::vector<int>(inj.begin() + 1, inj.end());
}

}  // namespace eqgeo
