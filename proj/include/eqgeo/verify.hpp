#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "automorphisms.hpp"
#include "codes.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "johnson.hpp"
#include "qary.hpp"
#include "sets.hpp"

// The acceptance checks, one per verified statement.  Every expectation is an
// exact integer pinned below; randomized sweeps draw from a fixed-seed
// generator so identical options give identical reports.

namespace eqgeo {

struct VerifyOptions {
  int max_n = 12;             // upper bound for the binary-geometry sweeps
  std::uint64_t seed = 1031;  // used by the randomized spot checks
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string tag;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

namespace detail {

inline constexpr int kWitnessSamples = 10000;  // random pairs for the diameter witness
inline constexpr int kPathSamples = 500;       // random BFS paths per i == 0 instance

inline CheckResult vpass(std::string detail) {
  return {"", CheckStatus::pass, std::move(detail)};
}
inline CheckResult vfail(std::string detail) {
  return {"", CheckStatus::fail, std::move(detail)};
}
inline CheckResult vskip(std::string detail) {
  return {"", CheckStatus::skip, std::move(detail)};
}

inline std::vector<std::pair<int, int>> binary_instances(int max_n, int hard_cap = 12) {
  std::vector<std::pair<int, int>> v;
  for (int n = 3; n <= std::min(max_n, hard_cap); ++n)
    for (int m = 1; 3 * m <= n; ++m) v.push_back({n, m});
  return v;
}

inline std::string nm(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

// criterion: configuration counts of the three small geometries
inline CheckResult check_config_counts(const VerifyOptions& o) {
  struct Want {
    int n, m, points, lines, lines_per_point;
  };
  const Want wants[] = {{3, 1, 3, 1, 1}, {4, 1, 6, 4, 2}, {6, 2, 15, 15, 3}};
  int done = 0;
  for (const Want& w : wants) {
    if (w.n > o.max_n) continue;
    Geometry g(w.n, w.m);
    if (g.num_points() != w.points)
      return vfail(nm(w.n, w.m) + " has " + std::to_string(g.num_points()) + " points, want " +
                   std::to_string(w.points));
    if (int(g.lines().size()) != w.lines)
      return vfail(nm(w.n, w.m) + " has " + std::to_string(g.lines().size()) + " lines, want " +
                   std::to_string(w.lines));
    for (int p = 0; p < g.num_points(); ++p)
      if (int(g.lines_through(p).size()) != w.lines_per_point)
        return vfail(nm(w.n, w.m) + " point " + std::to_string(p) + " lies on " +
                     std::to_string(g.lines_through(p).size()) + " lines, want " +
                     std::to_string(w.lines_per_point));
    ++done;
  }
  if (!done) return vskip("all fixed instances above max_n");
  return vpass(std::to_string(done) + " configurations verified");
}

// criterion: diameter of the collinearity graph is at most 2, with the
// constructive witness checked on random pairs
inline CheckResult check_coll_graph(const VerifyOptions& o) {
  auto inst = binary_instances(o.max_n);
  if (inst.empty()) return vskip("no instances below max_n");
  std::vector<Geometry> gs;
  for (auto [n, m] : inst) gs.emplace_back(n, m);
  for (size_t k = 0; k < gs.size(); ++k) {
    int d = graph_diameter(gs[k].adjacency());
    if (d < 0 || d > 2)
      return vfail(nm(inst[k].first, inst[k].second) + " diameter " + std::to_string(d));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<size_t> pick(0, gs.size() - 1);
  auto random_support = [&](int n, int w) {
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = i + 1;
    std::shuffle(coords.begin(), coords.end(), rng);
    mask_t s = 0;
    for (int i = 0; i < w; ++i) s |= mask_t{1} << (coords[i] - 1);
    return s;
  };
  for (int it = 0; it < kWitnessSamples; ++it) {
    const Geometry& g = gs[pick(rng)];
    mask_t I = random_support(g.n(), 2 * g.m()), J;
    do J = random_support(g.n(), 2 * g.m());
    while (J == I);
    mask_t W = common_neighbor_witness(g, I, J);
    bool ok = popcount(W) == 2 * g.m() && W != I && W != J && popcount(W & I) == g.m() &&
              popcount(W & J) == g.m();
    if (!ok)
      return vfail("witness " + set_to_string(W) + " fails for " + set_to_string(I) + ", " +
                   set_to_string(J) + " in " + nm(g.n(), g.m()));
  }
  return vpass(std::to_string(gs.size()) + " instances have diameter <= 2; " +
               std::to_string(kWitnessSamples) + " random witnesses verified");
}

// criterion: maximal-clique structure (lines at n = 3m, one-or-all at (7,2),
// a non-singular maximal clique at (8,2), size <= n up to n = 10)
inline CheckResult check_max_cliques(const VerifyOptions& o) {
  std::string done;
  for (auto [n, m] : {std::pair{3, 1}, {6, 2}, {9, 3}}) {
    if (n > o.max_n) continue;
    Geometry g(n, m);
    std::vector<std::vector<int>> lines;
    for (const auto& ln : g.lines()) {
      std::vector<int> v{ln[0], ln[1], ln[2]};
      std::sort(v.begin(), v.end());
      lines.push_back(std::move(v));
    }
    std::sort(lines.begin(), lines.end());
    if (enumerate_maximal_cliques(g.adjacency()) != lines)
      return vfail(nm(n, m) + ": maximal cliques differ from the line set");
    done += nm(n, m) + " cliques=lines; ";
  }
  if (7 <= o.max_n) {
    Geometry g(7, 2);
    for (int p = 0; p < g.num_points(); ++p)
      for (const auto& ln : g.lines()) {
        if (p == ln[0] || p == ln[1] || p == ln[2]) continue;
        int c = g.adjacent(p, ln[0]) + g.adjacent(p, ln[1]) + g.adjacent(p, ln[2]);
        if (c != 1 && c != 3)
          return vfail("(7,2): point " + std::to_string(p) + " is collinear with " +
                       std::to_string(c) + " points of a line off it");
      }
    done += "(7,2) one-or-all; ";
  }
  if (8 <= o.max_n) {
    Geometry g(8, 2);
    bool found = false;
    for (const auto& r : maximal_cliques(g))
      if (r.kind == CliqueKind::other) found = true;
    if (!found) return vfail("(8,2): every maximal clique is a singular subspace");
    done += "(8,2) non-singular maximal clique; ";
  }
  for (auto [n, m] : binary_instances(o.max_n, 10)) {
    Geometry g(n, m);
    int worst = 0;
    for_each_maximal_clique(g.adjacency(),
                            [&](const std::vector<int>& c) { worst = std::max(worst, int(c.size())); });
    if (worst > n)
      return vfail(nm(n, m) + ": maximal clique of size " + std::to_string(worst) + " exceeds n");
  }
  if (done.empty()) return vskip("all fixed instances above max_n");
  return vpass(done + "clique sizes <= n on all instances");
}

// criterion: λ formula against brute force, plus the equality pattern
inline CheckResult check_lambda(const VerifyOptions& o) {
  auto inst = binary_instances(o.max_n, 10);
  if (inst.empty()) return vskip("no instances below max_n");
  for (auto [n, m] : inst) {
    ExtendedGeometry eg(n, m);
    std::vector<std::uint64_t> lam(eg.max_layer() + 1, 0);
    for (int i = 1; i <= eg.max_layer(); ++i) {
      lam[i] = lambda_count(n, m, i);
      for (mask_t X : eg.layer(i))
        if (lambda_brute(eg, X) != lam[i])
          return vfail(nm(n, m) + " layer " + std::to_string(i) + ": brute count differs at " +
                       set_to_string(X));
    }
    for (int i = 2; i <= eg.max_layer(); ++i) {
      bool equal = lam[i] == lam[1];
      bool sanctioned = (i == 2 * m - 1 && (n == 4 * m - 1 || n == 4 * m)) ||
                        (i == 2 * m && n == 4 * m + 1);
      if (equal != sanctioned)
        return vfail(nm(n, m) + ": λ_" + std::to_string(i) + (equal ? " == " : " != ") + "λ_1 " +
                     "violates the equality pattern");
    }
  }
  return vpass(std::to_string(inst.size()) + " instances: formula matches brute force, " +
               "equality pattern exact");
}

// criterion: one ~-component for every closure center once n >= 3m+1; at
// n = 3m only the weight-2 centers are connected
inline CheckResult check_pencils(const VerifyOptions& o) {
  std::string done;
  for (auto [n, m] : {std::pair{7, 2}, {8, 2}, {9, 2}}) {
    if (n > o.max_n) continue;
    ExtendedGeometry eg(n, m);
    for (mask_t c : eg.closure_points()) {
      auto comps = tilde_components(eg.base(), pencil(eg, c));
      if (comps.size() != 1)
        return vfail(nm(n, m) + " center " + set_to_string(c) + " has " +
                     std::to_string(comps.size()) + " components");
    }
    done += nm(n, m) + " all centers connected; ";
  }
  if (6 <= o.max_n) {
    ExtendedGeometry eg(6, 2);
    for (int layer = 1; layer <= eg.max_layer(); ++layer)
      for (mask_t c : eg.layer(layer)) {
        size_t comps = tilde_components(eg.base(), pencil(eg, c)).size();
        if (layer == 1 && comps != 1)
          return vfail("(6,2) weight-2 center " + set_to_string(c) + " disconnected");
        if (layer > 1 && comps == 1)
          return vfail("(6,2) weight-4 center " + set_to_string(c) + " unexpectedly connected");
      }
    done += "(6,2) connected iff weight-2 center";
  }
  if (done.empty()) return vskip("all fixed instances above max_n");
  return vpass(done);
}

// criterion: automorphism group orders, the generated-group cross-check at
// (8,2), and classification of every element.  The classification clause is
// reported as found: at (8,2) the group is 2^6:S_8 and contains products of
// s-maps (complement-on-a-parity-class maps) that admit no single
// permutation*special factorization, so the zero-refusal requirement cannot
// be met; the check states the exact split instead of hiding it.
inline CheckResult check_theorem_aut(const VerifyOptions& o) {
  struct Want {
    int n, m;
    std::uint64_t order;  // 0: no pinned order, cross-check named generators instead
  };
  const Want wants[] = {{4, 1, 24}, {6, 2, 720}, {7, 2, 40320}, {8, 2, 0}};
  std::string done;
  std::string refusal;
  for (const Want& w : wants) {
    if (w.n > o.max_n) continue;
    Geometry g(w.n, w.m);
    AutGroup gr = automorphism_group(g);
    if (w.order != 0 && gr.order != w.order)
      return vfail(nm(w.n, w.m) + " group order " + std::to_string(gr.order) + ", want " +
                   std::to_string(w.order));
    if (w.order == 0) {
      // the same order must arise from the named generators, via Schreier-Sims
      std::vector<PointMap> gens;
      for (int i = 1; i < w.n; ++i) {
        std::vector<int> perm(w.n);
        for (int j = 0; j < w.n; ++j) perm[j] = j + 1;
        std::swap(perm[i - 1], perm[i]);
        gens.push_back(permutation_point_map(perm, g));
      }
      for (int i = 1; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j) {
          gens.push_back(
              induced_point_map(make_special_map(SpecialMapKind::s, {i, j}, w.n), g).value());
          gens.push_back(
              induced_point_map(make_special_map(SpecialMapKind::s_prime, {i, j}, w.n), g).value());
        }
      std::uint64_t generated = permutation_group_order(g.num_points(), gens);
      if (generated != gr.order)
        return vfail(nm(w.n, w.m) + ": generated order " + std::to_string(generated) +
                     " != exhaustive order " + std::to_string(gr.order));
    }
    Classifier cls(g);
    std::uint64_t ok = 0, refused = 0;
    gr.for_each_element([&](const PointMap& f) {
      try {
        cls.classify(f);
        ++ok;
      } catch (const std::logic_error&) {
        ++refused;
      }
    });
    if (ok + refused != gr.order)
      return vfail(nm(w.n, w.m) + ": enumerated " + std::to_string(ok + refused) +
                   " elements, order " + std::to_string(gr.order));
    if (refused != 0 && refusal.empty()) {
      refusal = nm(w.n, w.m) + ": " + std::to_string(refused) + " of " +
                std::to_string(gr.order) + " elements admit no permutation*special decomposition";
      // name a concrete representative when the witness composite is one
      LinearMap zmap = make_special_map(SpecialMapKind::s, {1, 2}, w.n)
                           .compose(make_special_map(SpecialMapKind::s, {3, 4}, w.n));
      if (auto zf = induced_point_map(zmap, g); zf && is_geometry_automorphism(g, *zf)) {
        bool witness_refused = false;
        try {
          cls.classify(*zf);
        } catch (const std::logic_error&) {
          witness_refused = true;
        }
        if (witness_refused) refusal += " (e.g. s_1,2 composed with s_3,4)";
      }
    }
    done += nm(w.n, w.m) + "=" + std::to_string(gr.order) + " ";
  }
  if (done.empty()) return vskip("all fixed instances above max_n");
  if (!refusal.empty()) return vfail(refusal + "; orders " + done);
  return vpass("orders " + done + "with every element classified");
}

// criterion: the special maps preserve the weight-2m layer exactly at
// n = 4m-1 (l) and n = 4m (s, s'), with the weight-(2m+2) failure witness at
// n = 4m+1
inline CheckResult check_exceptional_maps(const VerifyOptions& o) {
  std::string done;
  for (int m = 1; 4 * m - 1 <= o.max_n && 4 * m - 1 <= 12; ++m) {
    int n = 4 * m - 1;
    Geometry g(n, m);
    for (int i = 1; i <= n; ++i)
      if (!induced_point_map(make_special_map(SpecialMapKind::l, {i}, n), g))
        return vfail("l_" + std::to_string(i) + " fails to preserve weights at n=" +
                     std::to_string(n));
    done += "l at n=" + std::to_string(n) + "; ";
  }
  for (int m = 1; 4 * m <= o.max_n && 4 * m <= 12; ++m) {
    int n = 4 * m;
    Geometry g(n, m);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (!induced_point_map(make_special_map(SpecialMapKind::s, {i, j}, n), g))
          return vfail("s_" + std::to_string(i) + "," + std::to_string(j) +
                       " fails to preserve weights at n=" + std::to_string(n));
        if (!induced_point_map(make_special_map(SpecialMapKind::s_prime, {i, j}, n), g))
          return vfail("s'_" + std::to_string(i) + "," + std::to_string(j) +
                       " fails to preserve weights at n=" + std::to_string(n));
      }
    done += "s,s' at n=" + std::to_string(n) + "; ";
  }
  if (9 <= o.max_n) {
    Geometry g(9, 2);
    for (int i = 1; i <= 9; ++i) {
      LinearMap li = make_special_map(SpecialMapKind::l, {i}, 9);
      if (induced_point_map(li, g))
        return vfail("l_" + std::to_string(i) + " unexpectedly preserves weights at n=9");
      // the image of any point through coordinate i has weight 2m+2
      mask_t I = lowest_bits(full_mask(9) & ~(mask_t{1} << (i - 1)), 3) | (mask_t{1} << (i - 1));
      F2Vector img = li.apply(F2Vector(9, I));
      if (int(img.weight()) != 2 * 2 + 2)
        return vfail("l_" + std::to_string(i) + " witness has weight " +
                     std::to_string(img.weight()) + ", want 6");
    }
    done += "n=9 failure witnessed at weight 6";
  }
  if (done.empty()) return vskip("all fixed instances above max_n");
  return vpass(done);
}

// criterion: the complement map at (8,2) is a graph automorphism that breaks
// at least one line
inline CheckResult check_complement_map(const VerifyOptions& o) {
  if (8 > o.max_n) return vskip("(8,2) above max_n");
  Geometry g(8, 2);
  PointMap f = complement_point_map(g);
  if (!is_graph_automorphism(g.adjacency(), f))
    return vfail("(8,2): complement map is not a graph automorphism");
  int broken = 0;
  for (const auto& ln : g.lines())
    if (g.third_point(f[ln[0]], f[ln[1]]) != f[ln[2]]) ++broken;
  if (broken == 0) return vfail("(8,2): complement map preserves every line");
  return vpass("graph automorphism; " + std::to_string(broken) + " of " +
               std::to_string(g.lines().size()) + " lines broken");
}

// criterion: {P,P'}^cc is the pair at (9,2)/(10,2) and the full line at
// (7,2)/(6,2), over all adjacent pairs
inline CheckResult check_double_perp(const VerifyOptions& o) {
  std::string done;
  for (auto [n, m, full_line] :
       {std::tuple{6, 2, true}, {7, 2, true}, {9, 2, false}, {10, 2, false}}) {
    if (n > o.max_n) continue;
    Geometry g(n, m);
    for (int a = 0; a < g.num_points(); ++a) {
      bool bad = false;
      g.neighbors(a).for_each([&](int b) {
        if (b <= a || bad) return;
        Bitset X(g.num_points());
        X.set(a);
        X.set(b);
        std::vector<int> dp = double_perp(g, X).to_vector();
        std::vector<int> want{a, b};
        if (full_line) want.push_back(g.third_point(a, b));
        std::sort(want.begin(), want.end());
        if (dp != want) bad = true;
      });
      if (bad) return vfail(nm(n, m) + ": a double perp differs from the expected set");
    }
    done += nm(n, m) + (full_line ? "=line; " : "=pair; ");
  }
  if (done.empty()) return vskip("all fixed instances above max_n");
  return vpass(done);
}

// criterion: decomposition round-trips, the (7,2) subspace bridge, and the
// closed-form maximal dimension
inline CheckResult check_codes(const VerifyOptions& o) {
  for (int k = 1; k <= 4; ++k)
    for (int s = 1; s <= 3; ++s)
      for (int r = 0; r <= 3; ++r) {
        Code c = replicated_simplex(k, s, r);
        EquidistantProfile p = bonis_decompose(c);
        EquidistantProfile want{k, s, r, s << (k - 1)};
        if (!(p == want))
          return vfail("replicated_simplex(" + std::to_string(k) + "," + std::to_string(s) + "," +
                       std::to_string(r) + ") decomposes as (" + std::to_string(p.k) + "," +
                       std::to_string(p.s) + "," + std::to_string(p.r) + ",t=" +
                       std::to_string(p.t) + ")");
      }
  std::string bridge = "(7,2) skipped";
  if (7 <= o.max_n) {
    Geometry g(7, 2);
    auto subs = maximal_singular_subspaces(g);
    if (subs.empty()) return vfail("(7,2): no maximal singular subspaces found");
    for (const auto& sub : subs) {
      EquidistantProfile p = bonis_decompose(code_from_subspace(g, sub));
      if (!(p == EquidistantProfile{3, 1, 0, 4}))
        return vfail("(7,2): a maximal singular subspace decomposes as (" + std::to_string(p.k) +
                     "," + std::to_string(p.s) + "," + std::to_string(p.r) + ")");
    }
    bridge = std::to_string(subs.size()) + " subspaces bridged to (3,1,0,4)";
  }
  struct DimWant {
    int n, t, k;
  };
  for (const DimWant& w : {DimWant{7, 4, 3}, {6, 4, 2}, {3, 2, 2}})
    if (max_equidistant_dim(w.n, w.t) != w.k)
      return vfail("max_equidistant_dim(" + std::to_string(w.n) + "," + std::to_string(w.t) +
                   ") != " + std::to_string(w.k));
  return vpass("36 round-trips; " + bridge + "; dimension formula matches");
}

inline bool johnson_path_valid(const JohnsonGraph& jg, mask_t X, mask_t Y,
                               const std::vector<mask_t>& path) {
  if (path.empty() || path.front() != X || path.back() != Y) return false;
  for (mask_t v : path)
    if (popcount(v) != jg.t() || (v & ~full_mask(jg.n()))) return false;
  for (size_t p = 0; p + 1 < path.size(); ++p)
    if (path[p] == path[p + 1] || popcount(path[p] & path[p + 1]) != jg.i()) return false;
  return true;
}

// criterion: J(n,t,i) connectivity across the window, constructive paths,
// and the disjoint-K_2 boundary case
inline CheckResult check_johnson(const VerifyOptions& o) {
  int cap = std::min(o.max_n, 10);
  if (cap < 3) return vskip("no Johnson windows below max_n");
  int instances = 0, paths = 0;
  std::mt19937_64 rng(o.seed);
  for (int n = 3; n <= cap; ++n)
    for (int t = 2; t < n; ++t)
      for (int i = std::max(0, 2 * t - n); i < t; ++i) {
        JohnsonGraph jg(n, t, i);
        ++instances;
        const auto& verts = jg.vertices();
        if (n == 2 * t && i == 0) {
          if (jg.connected()) return vfail("J(n,n/2,0) unexpectedly connected at n=" +
                                           std::to_string(n));
          for (int v = 0; v < jg.num_vertices(); ++v) {
            if (jg.adjacency()[v].count() != 1 ||
                !jg.adjacent_masks(verts[v], full_mask(n) ^ verts[v]))
              return vfail("J(" + std::to_string(n) + "," + std::to_string(t) +
                           ",0): vertex not paired with its complement");
            auto p = connectivity_path(jg, verts[v], full_mask(n) ^ verts[v]);
            if (!johnson_path_valid(jg, verts[v], full_mask(n) ^ verts[v], p))
              return vfail("complement path invalid in the K_2 case");
            ++paths;
          }
          bool threw = false;
          try {
            connectivity_path(jg, verts[0], verts[1] == (full_mask(n) ^ verts[0]) ? verts[2]
                                                                                  : verts[1]);
          } catch (const std::runtime_error&) {
            threw = true;
          }
          if (!threw) return vfail("cross-component path did not fail in the K_2 case");
          continue;
        }
        if (!jg.connected())
          return vfail("J(" + std::to_string(n) + "," + std::to_string(t) + "," +
                       std::to_string(i) + ") is disconnected");
        if (i >= 1) {
          for (int a = 0; a < jg.num_vertices(); ++a)
            for (int b = a + 1; b < jg.num_vertices(); ++b) {
              auto p = connectivity_path(jg, verts[a], verts[b]);
              if (!johnson_path_valid(jg, verts[a], verts[b], p))
                return vfail("constructive path invalid in J(" + std::to_string(n) + "," +
                             std::to_string(t) + "," + std::to_string(i) + ")");
              ++paths;
            }
        } else {
          std::uniform_int_distribution<int> pick(0, jg.num_vertices() - 1);
          for (int s = 0; s < kPathSamples; ++s) {
            int a = pick(rng), b = pick(rng);
            auto p = connectivity_path(jg, verts[a], verts[b]);
            if (!johnson_path_valid(jg, verts[a], verts[b], p) && a != b)
              return vfail("BFS path invalid in J(" + std::to_string(n) + "," +
                           std::to_string(t) + ",0)");
            ++paths;
          }
        }
      }
  return vpass(std::to_string(instances) + " windows connected as expected, " +
               std::to_string(paths) + " paths verified");
}

// criterion: the q = 5 diameter example
inline CheckResult check_qary(const VerifyOptions& o) {
  if (o.max_n < 6) return vskip("q-ary instances need the n=6 allowance");
  QGeometry small(3, 2);
  if (small.num_points() != 16) return vfail("(3,2): expected 16 points");
  if (!qary_connectivity_and_diameter(small).connected) return vfail("(3,2): disconnected");
  QGeometry g(5, 2);
  if (g.num_points() != 1536)
    return vfail("(5,2): " + std::to_string(g.num_points()) + " points, want 1536");
  int a = g.index_of(QVector{5, {0, 1, 1, 1, 1, 1}});
  int b = g.index_of(QVector{5, {0, 1, 1, 1, 2, 2}});
  if (a < 0 || b < 0) return vfail("(5,2): example vectors are not points");
  if (qary_collinear(g, a, b)) return vfail("(5,2): example pair is collinear");
  if (!qary_common_neighbors(g, a, b).empty())
    return vfail("(5,2): example pair has a common neighbor");
  QConnectivity c = qary_connectivity_and_diameter(g);
  if (!c.connected) return vfail("(5,2): disconnected");
  if (c.diameter < 3) return vfail("(5,2): diameter " + std::to_string(c.diameter) + " < 3");
  return vpass("(5,2): witness pair non-collinear with no common neighbor; connected, diameter " +
               std::to_string(c.diameter));
}

}  // namespace detail

struct NamedCheck {
  const char* tag;
  CheckResult (*fn)(const VerifyOptions&);
};

inline const std::vector<NamedCheck>& verification_checks() {
  static const std::vector<NamedCheck> checks = {
      {"config-counts", detail::check_config_counts},
      {"prop-coll-graph", detail::check_coll_graph},
      {"prop-max-cliques", detail::check_max_cliques},
      {"lemma-lambda", detail::check_lambda},
      {"prop-pencil-conn", detail::check_pencils},
      {"theorem-aut", detail::check_theorem_aut},
      {"exceptional-maps", detail::check_exceptional_maps},
      {"complement-map", detail::check_complement_map},
      {"double-perp", detail::check_double_perp},
      {"codes-bonis", detail::check_codes},
      {"lemma-John", detail::check_johnson},
      {"qary-example", detail::check_qary},
  };
  return checks;
}

inline CheckResult run_check(const NamedCheck& c, const VerifyOptions& o) {
  CheckResult r;
  try {
    r = c.fn(o);
  } catch (const std::exception& e) {
    r = detail::vfail(std::string("exception: ") + e.what());
  }
  r.tag = c.tag;
  return r;
}

inline CheckResult run_check(const std::string& tag, const VerifyOptions& o) {
  for (const NamedCheck& c : verification_checks())
    if (tag == c.tag) return run_check(c, o);
  throw std::invalid_argument("unknown verification tag: " + tag);
}

inline std::vector<CheckResult> run_all_checks(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (const NamedCheck& c : verification_checks()) out.push_back(run_check(c, o));
  return out;
}

}  // namespace eqgeo
