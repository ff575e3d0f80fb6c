#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "bitset.hpp"

// Exhaustive maximal-clique enumeration: Bron-Kerbosch with pivoting over
// bitset neighborhoods.

namespace eqgeo {

namespace detail {

inline void bron_kerbosch(const std::vector<Bitset>& adj, Bitset& R, Bitset P, Bitset X,
                          const std::function<void(const Bitset&)>& emit) {
  if (P.none() && X.none()) {
    emit(R);
    return;
  }
  // pivot: vertex of P|X with the most neighbours in P
  int pivot = -1, best = -1;
  (P | X).for_each([&](int u) {
    int c = (P & adj[u]).count();
    if (c > best) { best = c; pivot = u; }
  });
  Bitset cand = P - adj[pivot];
  cand.for_each([&](int v) {
    R.set(v);
    bron_kerbosch(adj, R, P & adj[v], X & adj[v], emit);
    R.reset(v);
    P.reset(v);
    X.set(v);
  });
}

}  // namespace detail

// visits every maximal clique exactly once, without buffering them
inline void for_each_maximal_clique(const std::vector<Bitset>& adj,
                                    const std::function<void(const std::vector<int>&)>& fn) {
  int n = int(adj.size());
  Bitset R(n), P(n), X(n);
  for (int i = 0; i < n; ++i) P.set(i);
  detail::bron_kerbosch(adj, R, P, X, [&](const Bitset& c) { fn(c.to_vector()); });
}

// emits every maximal clique exactly once, in a deterministic order
inline std::vector<std::vector<int>> enumerate_maximal_cliques(const std::vector<Bitset>& adj) {
  std::vector<std::vector<int>> out;
  for_each_maximal_clique(adj, [&](const std::vector<int>& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqgeo
