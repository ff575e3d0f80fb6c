#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitset.hpp"
#include "f2.hpp"
#include "geometry.hpp"
#include "sets.hpp"

// Automorphisms of P_m: exhaustive group computation by backtracking over an
// equitable-partition refinement (orbit sizes multiplied along a stabilizer
// chain), Schreier-Sims order computation for generated subgroups,
// classification of automorphisms into permutation-times-special-map form,
// and extension of automorphisms to the layered closure.

namespace eqgeo {

inline constexpr int kMaxAutPoints = 512;

using PointMap = std::vector<int>;  // image per point index

inline PointMap identity_map(int n) {
  PointMap r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

inline PointMap compose_maps(const PointMap& a, const PointMap& b) {  // a after b
  PointMap r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline PointMap inverse_map(const PointMap& a) {
  PointMap r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
  return r;
}

inline bool is_identity_map(const PointMap& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != int(i)) return false;
  return true;
}

// point map induced by an invertible linear map, when it preserves weight 2m
inline std::optional<PointMap> induced_point_map(const LinearMap& M, const Geometry& g) {
  if (M.dim() != g.n()) throw std::invalid_argument("dimension mismatch");
  if (!M.invertible()) throw std::invalid_argument("inducing map must be invertible");
  PointMap f(g.num_points());
  for (int p = 0; p < g.num_points(); ++p) {
    F2Vector img = M.apply(F2Vector(g.n(), g.support(p)));
    int idx = g.index_of(img.word());
    if (idx < 0) return std::nullopt;
    f[p] = idx;
  }
  return f;
}

// point map of a coordinate permutation (perm[i-1] = image of coordinate i)
inline PointMap permutation_point_map(const std::vector<int>& perm, const Geometry& g) {
  auto f = induced_point_map(LinearMap::permutation(perm), g);
  if (!f) throw std::logic_error("coordinate permutation failed to induce a point map");
  return *f;
}

inline bool is_point_bijection(const Geometry& g, const PointMap& f) {
  if (int(f.size()) != g.num_points()) return false;
  std::vector<char> hit(f.size(), 0);
  for (int y : f) {
    if (y < 0 || y >= int(f.size()) || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

// bijection mapping every line onto a line (equivalent in both directions,
// since distinct lines have distinct images and the line set is finite)
inline bool is_geometry_automorphism(const Geometry& g, const PointMap& f) {
  if (!is_point_bijection(g, f)) return false;
  for (const auto& ln : g.lines()) {
    if (!g.adjacent(f[ln[0]], f[ln[1]])) return false;
    if (g.third_point(f[ln[0]], f[ln[1]]) != f[ln[2]]) return false;
  }
  return true;
}

inline bool is_graph_automorphism(const std::vector<Bitset>& adj, const PointMap& f) {
  int n = int(adj.size());
  if (int(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int y : f) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a].test(b) != adj[f[a]].test(f[b])) return false;
  return true;
}

// P_I -> P_{[n] \ I}; a collinearity-graph automorphism when n = 4m
inline PointMap complement_point_map(const Geometry& g) {
  if (g.n() != 4 * g.m()) throw std::invalid_argument("complement map needs n = 4m");
  PointMap f(g.num_points());
  for (int p = 0; p < g.num_points(); ++p)
    f[p] = g.index_of(full_mask(g.n()) ^ g.support(p));
  return f;
}

// ---- backtracking search over an equitable partition ------------------------

namespace detail {

// Searches for bijections of a structure (adjacency, plus an optional
// third-point table enforcing line images) extending a seed assignment.
// Domain and codomain partitions are refined in parallel; a cell mismatch
// prunes the branch, so the search is exhaustive.
class IsoSearch {
 public:
  IsoSearch(const std::vector<Bitset>& adj, const std::vector<std::vector<int>>* third)
      : N_(int(adj.size())), adj_(adj), third_(third) {}

  std::optional<PointMap> find(const std::vector<std::pair<int, int>>& seeds) {
    reset();
    result_.reset();
    bool ok = true;
    for (auto [x, y] : seeds) ok = ok && assign(x, y);
    if (ok) dfs();
    return result_;
  }

  // refined cells for the identity seed on `fixed`: each entry lists the
  // vertices of one cell
  std::vector<std::vector<int>> stabilizer_cells(const std::vector<int>& fixed) {
    reset();
    for (int b : fixed)
      if (!assign(b, b)) throw std::logic_error("identity seed rejected");
    if (!refine()) throw std::logic_error("identity refinement rejected");
    return dcell_;
  }

 private:
  void reset() {
    fwd_.assign(N_, -1);
    bwd_.assign(N_, -1);
    trail_.clear();
  }

  // commit x -> y together with everything it forces; false on conflict
  bool assign(int x, int y) {
    std::vector<std::pair<int, int>> pending{{x, y}};
    for (size_t qi = 0; qi < pending.size(); ++qi) {
      auto [a, b] = pending[qi];
      if (fwd_[a] >= 0) {
        if (fwd_[a] == b) continue;
        return false;
      }
      if (bwd_[b] >= 0) return false;
      for (auto [u, v] : trail_) {
        bool e1 = adj_[a].test(u), e2 = adj_[b].test(v);
        if (e1 != e2) return false;
        if (e1 && third_)  // the third point of {a,u} is forced onto that of {b,v}
          pending.push_back({(*third_)[a][u], (*third_)[b][v]});
      }
      fwd_[a] = b;
      bwd_[b] = a;
      trail_.push_back({a, b});
    }
    return true;
  }

  void rollback(size_t depth) {
    while (trail_.size() > depth) {
      auto [x, y] = trail_.back();
      trail_.pop_back();
      fwd_[x] = -1;
      bwd_[y] = -1;
    }
  }

  // parallel 1-WL refinement seeded by the current assignment; false when the
  // two sides cannot be matched cell-by-cell
  bool refine() {
    dcol_.assign(N_, 0);
    ccol_.assign(N_, 0);
    int ncolors = 1;
    for (auto [x, y] : trail_) {
      dcol_[x] = ncolors;
      ccol_[y] = ncolors;
      ++ncolors;
    }
    dcell_.assign(ncolors, {});
    ccell_.assign(ncolors, {});
    for (int v = 0; v < N_; ++v) {
      dcell_[dcol_[v]].push_back(v);
      ccell_[ccol_[v]].push_back(v);
    }
    std::vector<int> queue(ncolors);
    for (int c = 0; c < ncolors; ++c) queue[c] = c;
    dcnt_.assign(N_, 0);
    ccnt_.assign(N_, 0);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      // snapshot: splits during this round may rewrite the splitter cell
      std::vector<int> dsrc = dcell_[queue[qi]];
      std::vector<int> csrc = ccell_[queue[qi]];
      std::vector<int> touched;
      for (int u : dsrc)
        adj_[u].for_each([&](int v) {
          if (!dcnt_[v] && !ccnt_[v]) touched.push_back(v);
          ++dcnt_[v];
        });
      for (int u : csrc)
        adj_[u].for_each([&](int v) {
          if (!dcnt_[v] && !ccnt_[v]) touched.push_back(v);
          ++ccnt_[v];
        });
      std::vector<char> seen(ncolors, 0);
      std::vector<int> affected;
      for (int v : touched) {
        if (!seen[dcol_[v]]) {
          seen[dcol_[v]] = 1;
          affected.push_back(dcol_[v]);
        }
        if (!seen[ccol_[v]]) {
          seen[ccol_[v]] = 1;
          affected.push_back(ccol_[v]);
        }
      }
      std::sort(affected.begin(), affected.end());
      bool ok = true;
      for (int c : affected)
        if (!split_cell(c, ncolors, queue)) {
          ok = false;
          break;
        }
      for (int u : dsrc)
        adj_[u].for_each([&](int v) { dcnt_[v] = 0; });
      for (int u : csrc)
        adj_[u].for_each([&](int v) { ccnt_[v] = 0; });
      if (!ok) return false;
    }
    return true;
  }

  // split color c by the current neighbor counts, in parallel on both sides
  bool split_cell(int c, int& ncolors, std::vector<int>& queue) {
    std::vector<int> dm = dcell_[c], cm = ccell_[c];
    if (dm.size() != cm.size()) return false;
    if (dm.empty()) return true;
    std::sort(dm.begin(), dm.end(),
              [&](int a, int b) { return dcnt_[a] != dcnt_[b] ? dcnt_[a] < dcnt_[b] : a < b; });
    std::sort(cm.begin(), cm.end(),
              [&](int a, int b) { return ccnt_[a] != ccnt_[b] ? ccnt_[a] < ccnt_[b] : a < b; });
    std::vector<std::pair<size_t, size_t>> groups;  // [begin,end)
    for (size_t i = 0; i < dm.size();) {
      size_t j = i, jc = i;
      while (j < dm.size() && dcnt_[dm[j]] == dcnt_[dm[i]]) ++j;
      while (jc < cm.size() && ccnt_[cm[jc]] == ccnt_[cm[i]]) ++jc;
      if (dcnt_[dm[i]] != ccnt_[cm[i]] || j != jc) return false;
      groups.push_back({i, j});
      i = j;
    }
    if (groups.size() == 1) return true;
    for (size_t gi = 1; gi < groups.size(); ++gi) {
      int fresh = ncolors++;
      std::vector<int> dnew(dm.begin() + groups[gi].first, dm.begin() + groups[gi].second);
      std::vector<int> cnew(cm.begin() + groups[gi].first, cm.begin() + groups[gi].second);
      for (int v : dnew) dcol_[v] = fresh;
      for (int v : cnew) ccol_[v] = fresh;
      dcell_.push_back(std::move(dnew));
      ccell_.push_back(std::move(cnew));
      queue.push_back(fresh);
    }
    dm.resize(groups[0].second);
    cm.resize(groups[0].second);
    dcell_[c] = std::move(dm);
    ccell_[c] = std::move(cm);
    queue.push_back(c);
    return true;
  }

  void dfs() {
    if (result_) return;
    if (!refine()) return;
    // branch on the lowest vertex in the smallest multi-vertex cell
    int best = -1;
    for (int c = 0; c < int(dcell_.size()); ++c)
      if (dcell_[c].size() >= 2 && (best < 0 || dcell_[c].size() < dcell_[best].size())) best = c;
    if (best < 0) {
      // discrete partition: the remaining singletons are forced
      size_t depth = trail_.size();
      bool ok = true;
      for (int c = 0; c < int(dcell_.size()) && ok; ++c)
        if (dcell_[c].size() == 1 && fwd_[dcell_[c][0]] < 0) ok = assign(dcell_[c][0], ccell_[c][0]);
      if (ok && int(trail_.size()) == N_) {
        PointMap f(fwd_.begin(), fwd_.end());
        if (full_check(f)) result_ = f;
      }
      if (!result_) rollback(depth);
      return;
    }
    std::vector<int> dm = dcell_[best], cm = ccell_[best];
    std::sort(dm.begin(), dm.end());
    std::sort(cm.begin(), cm.end());
    int x = dm[0];
    for (int y : cm) {
      size_t depth = trail_.size();
      if (assign(x, y)) {
        dfs();
        if (result_) return;
      }
      rollback(depth);
    }
  }

  bool full_check(const PointMap& f) const {
    for (int a = 0; a < N_; ++a)
      for (int b = a + 1; b < N_; ++b) {
        if (adj_[a].test(b) != adj_[f[a]].test(f[b])) return false;
        if (third_ && adj_[a].test(b) && (*third_)[f[a]][f[b]] != f[(*third_)[a][b]]) return false;
      }
    return true;
  }

  int N_;
  const std::vector<Bitset>& adj_;
  const std::vector<std::vector<int>>* third_;
  std::vector<int> fwd_, bwd_, dcol_, ccol_, dcnt_, ccnt_;
  std::vector<std::vector<int>> dcell_, ccell_;
  std::vector<std::pair<int, int>> trail_;
  std::optional<PointMap> result_;
};

inline std::vector<std::vector<int>> third_point_table(const Geometry& g) {
  int np = g.num_points();
  std::vector<std::vector<int>> t(np, std::vector<int>(np, -1));
  for (int a = 0; a < np; ++a)
    g.neighbors(a).for_each([&](int b) { t[a][b] = g.third_point(a, b); });
  return t;
}

}  // namespace detail

// ---- full group via stabilizer chain ----------------------------------------

struct AutGroup {
  std::uint64_t order = 1;
  int num_points = 0;
  std::vector<int> base;  // chain of fixed points, lowest-index first
  // transversals[level] = coset representatives (identity first); each rep
  // fixes the earlier base points and moves base[level] within its orbit
  std::vector<std::vector<PointMap>> transversals;
  std::vector<PointMap> generators;  // the non-identity representatives

  // visits every group element exactly once
  template <class F>
  void for_each_element(F f) const {
    walk(0, identity_map(num_points), f);
  }

 private:
  template <class F>
  void walk(size_t level, const PointMap& cur, F& f) const {
    if (level == transversals.size()) {
      f(cur);
      return;
    }
    for (const auto& rep : transversals[level]) walk(level + 1, compose_maps(cur, rep), f);
  }
};

namespace detail {

inline AutGroup group_of_structure(const std::vector<Bitset>& adj,
                                   const std::vector<std::vector<int>>* third) {
  int np = int(adj.size());
  if (np > kMaxAutPoints) throw std::length_error("automorphism search capped at 512 points");
  IsoSearch search(adj, third);
  AutGroup gr;
  gr.num_points = np;
  std::vector<std::pair<int, int>> base_seeds;
  for (;;) {
    auto cells = search.stabilizer_cells(gr.base);
    int b = np;
    std::vector<int> cand;
    for (const auto& cell : cells)
      if (cell.size() >= 2) {
        int low = *std::min_element(cell.begin(), cell.end());
        if (low < b) {
          b = low;
          cand = cell;
        }
      }
    if (b == np) break;
    std::sort(cand.begin(), cand.end());
    std::vector<PointMap> level{identity_map(np)};
    for (int y : cand) {
      if (y == b) continue;
      auto seeds = base_seeds;
      seeds.push_back({b, y});
      if (auto ext = search.find(seeds)) {
        level.push_back(*ext);
        gr.generators.push_back(*ext);
      }
    }
    gr.order *= level.size();
    gr.transversals.push_back(std::move(level));
    gr.base.push_back(b);
    base_seeds.push_back({b, b});
  }
  return gr;
}

}  // namespace detail

// exhaustive automorphism group of the geometry (lines preserved)
inline AutGroup automorphism_group(const Geometry& g) {
  auto third = detail::third_point_table(g);
  return detail::group_of_structure(g.adjacency(), &third);
}

// exhaustive automorphism group of the collinearity graph Γ_m alone
inline AutGroup graph_automorphism_group(const Geometry& g) {
  return detail::group_of_structure(g.adjacency(), nullptr);
}

// ---- Schreier-Sims order for generated permutation groups --------------------

inline std::uint64_t permutation_group_order(int n, std::vector<PointMap> gens) {
  for (const auto& g : gens)
    if (int(g.size()) != n) throw std::invalid_argument("generator size mismatch");
  gens.erase(std::remove_if(gens.begin(), gens.end(), is_identity_map), gens.end());
  if (gens.empty()) return 1;

  std::vector<int> base;
  auto extend_base = [&](const PointMap& witness) {
    for (int i = 0; i < n; ++i)
      if (witness[i] != i) {
        base.push_back(i);
        return;
      }
    throw std::logic_error("base extension from identity");
  };
  extend_base(gens[0]);

  // orbits and transversals are rebuilt whenever a new strong generator
  // appears; each addition strictly grows some orbit, so the loop terminates
  // with a chain whose Schreier generators all strip to the identity
  std::vector<std::unordered_map<int, PointMap>> trans;
  for (;;) {
    for (const auto& g : gens) {
      bool fixes_all = true;
      for (int b : base) fixes_all = fixes_all && g[b] == b;
      if (fixes_all) extend_base(g);
    }
    trans.assign(base.size(), {});
    std::vector<std::vector<const PointMap*>> si(base.size());
    for (const auto& g : gens) {
      size_t lev = 0;
      while (lev < base.size() && g[base[lev]] == base[lev]) ++lev;
      for (size_t i = 0; i <= lev && i < base.size(); ++i) si[i].push_back(&g);
    }
    for (size_t i = 0; i < base.size(); ++i) {
      trans[i][base[i]] = identity_map(n);
      std::vector<int> orbit{base[i]};
      for (size_t h = 0; h < orbit.size(); ++h)
        for (const PointMap* s : si[i]) {
          int img = (*s)[orbit[h]];
          if (!trans[i].count(img)) {
            trans[i][img] = compose_maps(*s, trans[i][orbit[h]]);
            orbit.push_back(img);
          }
        }
    }
    auto strip = [&](PointMap h) {
      for (size_t j = 0; j < base.size(); ++j) {
        int img = h[base[j]];
        if (img == base[j]) continue;
        auto it = trans[j].find(img);
        if (it == trans[j].end()) return h;
        h = compose_maps(inverse_map(it->second), h);
      }
      return h;
    };
    std::optional<PointMap> residue;
    for (size_t i = 0; i < base.size() && !residue; ++i)
      for (auto& [p, tp] : trans[i]) {
        for (const PointMap* s : si[i]) {
          PointMap sg = compose_maps(inverse_map(trans[i].at((*s)[p])), compose_maps(*s, tp));
          PointMap h = strip(std::move(sg));
          if (!is_identity_map(h)) {
            residue = std::move(h);
            break;
          }
        }
        if (residue) break;
      }
    if (!residue) break;
    gens.push_back(std::move(*residue));
  }

  std::uint64_t order = 1;
  for (const auto& t : trans) order *= t.size();
  return order;
}

// ---- classification ----------------------------------------------------------

struct SpecialMapRef {
  SpecialMapKind kind;
  std::array<int, 2> idx;  // idx[1] == 0 for l-maps
  bool operator==(const SpecialMapRef&) const = default;
};

struct AutDecomposition {
  std::vector<int> perm;  // 1-based: perm[i-1] = σ(i)
  std::optional<SpecialMapRef> exceptional;
};

inline std::string special_map_name(const SpecialMapRef& s) {
  switch (s.kind) {
    case SpecialMapKind::l:
      return "l_" + std::to_string(s.idx[0]);
    case SpecialMapKind::s:
      return "s_" + std::to_string(s.idx[0]) + "," + std::to_string(s.idx[1]);
    default:
      return "s'_" + std::to_string(s.idx[0]) + "," + std::to_string(s.idx[1]);
  }
}

// Decomposes automorphisms as permutation ∘ special map, returning the first
// match in the fixed candidate order [none, l_1..l_n, s_ij asc, s'_ij asc].
// The weight-2 supports moved out of their layer by the closure extension pin
// the only viable candidates, so typical calls try at most two.
class Classifier {
 public:
  explicit Classifier(const Geometry& g) : g_(&g), n_(g.n()) {
    for (mask_t q : all_subsets(n_, 2)) {
      auto el = mask_elems(q);
      mask_t rest = lowest_bits(full_mask(n_) & ~q, 2 * g.m() - 1);
      mask_t i_side = (mask_t{1} << (el[0] - 1)) | rest;
      mask_t j_side = (mask_t{1} << (el[1] - 1)) | rest;
      p1_.push_back({q, {g.index_of(i_side), g.index_of(j_side)}});
    }
    auto consider = [&](SpecialMapRef ref) {
      std::vector<int> idx{ref.idx[0]};
      if (ref.kind != SpecialMapKind::l) idx.push_back(ref.idx[1]);
      if (auto pm = induced_point_map(make_special_map(ref.kind, idx, n_), g))
        candidates_.push_back({ref, inverse_map(*pm)});
    };
    for (int i = 1; i <= n_; ++i) consider({SpecialMapKind::l, {i, 0}});
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) consider({SpecialMapKind::s, {i, j}});
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) consider({SpecialMapKind::s_prime, {i, j}});
  }

  AutDecomposition classify(const PointMap& f) const {
    std::vector<mask_t> moved;  // weight-2 supports taken out of their layer
    for (const auto& [q, rep] : p1_) {
      mask_t img = g_->support(f[rep[0]]) ^ g_->support(f[rep[1]]);
      if (popcount(img) != 2) moved.push_back(q);
    }
    if (moved.empty()) {
      if (auto perm = try_perm(f)) return {*perm, std::nullopt};
    } else if (auto pat = match_pattern(moved)) {
      for (const auto& c : candidates_) {
        bool fits = c.ref == *pat ||
                    (pat->kind == SpecialMapKind::s && c.ref.kind == SpecialMapKind::s_prime &&
                     c.ref.idx == pat->idx);
        if (!fits) continue;
        if (auto perm = try_perm(compose_maps(f, c.inv))) return {*perm, c.ref};
      }
    }
    // exhaustive fixed-order fallback
    if (auto perm = try_perm(f)) return {*perm, std::nullopt};
    for (const auto& c : candidates_)
      if (auto perm = try_perm(compose_maps(f, c.inv))) return {*perm, c.ref};
    throw std::logic_error("automorphism admits no permutation/special-map decomposition");
  }

 private:
  struct Candidate {
    SpecialMapRef ref;
    PointMap inv;
  };

  // which exceptional part moves exactly this set of weight-2 supports:
  // l_i moves the pairs through i, s_ij / s'_ij move the pairs meeting {i,j}
  // other than {i,j} itself
  std::optional<SpecialMapRef> match_pattern(const std::vector<mask_t>& moved) const {
    std::vector<int> freq(n_ + 1, 0);
    for (mask_t q : moved)
      for (int e : mask_elems(q)) ++freq[e];
    if (int(moved.size()) == n_ - 1) {
      for (int e = 1; e <= n_; ++e)
        if (freq[e] == n_ - 1) return SpecialMapRef{SpecialMapKind::l, {e, 0}};
    }
    if (int(moved.size()) == 2 * (n_ - 2) && n_ > 4) {
      std::vector<int> heavy;
      for (int e = 1; e <= n_; ++e)
        if (freq[e] == n_ - 2) heavy.push_back(e);
      if (heavy.size() == 2) return SpecialMapRef{SpecialMapKind::s, {heavy[0], heavy[1]}};
    }
    return std::nullopt;
  }

  // recover the coordinate permutation when f is permutation-induced
  std::optional<std::vector<int>> try_perm(const PointMap& f) const {
    std::vector<mask_t> img(p1_.size());
    for (size_t k = 0; k < p1_.size(); ++k) {
      img[k] = g_->support(f[p1_[k].second[0]]) ^ g_->support(f[p1_[k].second[1]]);
      if (popcount(img[k]) != 2) return std::nullopt;
    }
    auto pair_index = [](int a, int b) {  // colex rank of {a,b}, a < b
      return size_t(b - 1) * size_t(b - 2) / 2 + size_t(a - 1);
    };
    std::vector<int> sigma(n_ + 1, 0);
    mask_t seen = 0;
    for (int a = 1; a <= n_; ++a) {
      int b1 = a == 1 ? 2 : 1;
      int b2 = a <= 2 ? 3 : 2;
      mask_t s1 = img[pair_index(std::min(a, b1), std::max(a, b1))];
      mask_t s2 = img[pair_index(std::min(a, b2), std::max(a, b2))];
      mask_t common = s1 & s2;
      if (popcount(common) != 1) return std::nullopt;
      sigma[a] = mask_elems(common)[0];
      if (mask_test(seen, sigma[a])) return std::nullopt;
      seen |= mask_t{1} << (sigma[a] - 1);
    }
    for (int p = 0; p < g_->num_points(); ++p) {
      mask_t s = g_->support(p), t = 0;
      while (s) {
        int e = std::countr_zero(s) + 1;
        s &= s - 1;
        t |= mask_t{1} << (sigma[e] - 1);
      }
      if (g_->index_of(t) != f[p]) return std::nullopt;
    }
    return std::vector<int>(sigma.begin() + 1, sigma.end());
  }

  const Geometry* g_;
  int n_;
  std::vector<std::pair<mask_t, std::array<int, 2>>> p1_;
  std::vector<Candidate> candidates_;
};

inline AutDecomposition classify_automorphism(const Geometry& g, const PointMap& f) {
  return Classifier(g).classify(f);
}

// ---- extension to the closure ------------------------------------------------

struct ClosureMap {
  std::vector<mask_t> domain;  // closure supports, layers ascending, colex inside
  std::vector<mask_t> image;   // image support per domain entry
};

// extends an automorphism of P_m to the layered closure via f̄(P⊙P') =
// f(P)⊙f(P'), checking independence from the choice of defining pair
inline ClosureMap extend_to_closure(const ExtendedGeometry& eg, const PointMap& f) {
  const Geometry& g = eg.base();
  if (g.n() < 3 * g.m() + 1) throw std::invalid_argument("closure extension needs n >= 3m+1");
  ClosureMap cm;
  for (int layer = 1; layer <= eg.max_layer(); ++layer)
    for (mask_t q : eg.layer(layer)) {
      mask_t img = 0;
      bool have = false;
      int direct = popcount(q) == 2 * g.m() ? g.index_of(q) : -1;
      if (direct >= 0) {
        img = g.support(f[direct]);
        have = true;
      }
      for (int a = 0; a < g.num_points(); ++a) {
        mask_t other = g.support(a) ^ q;
        if (other == 0) continue;
        int b = g.index_of(other);
        if (b <= a) continue;
        mask_t cand = g.support(f[a]) ^ g.support(f[b]);
        if (!have) {
          img = cand;
          have = true;
        } else if (cand != img) {
          throw std::logic_error("closure image depends on the defining pair");
        }
      }
      if (!have) throw std::logic_error("closure point misses a defining pair");
      cm.domain.push_back(q);
      cm.image.push_back(img);
    }
  // the extension of an automorphism permutes the closure
  auto want = cm.domain;
  auto got = cm.image;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) throw std::logic_error("closure extension is not a bijection");
  return cm;
}

}  // namespace eqgeo
