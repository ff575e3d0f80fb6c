#pragma once

#include <queue>
#include <vector>

#include "bitset.hpp"

// BFS utilities shared by the geometry, johnson and qary modules.

namespace eqgeo {

inline std::vector<int> bfs_distances(const std::vector<Bitset>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    adj[u].for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    });
  }
  return dist;
}

inline bool graph_connected(const std::vector<Bitset>& adj) {
  if (adj.empty()) return true;
  for (int d : bfs_distances(adj, 0))
    if (d < 0) return false;
  return true;
}

// -1 when disconnected
inline int graph_diameter(const std::vector<Bitset>& adj) {
  int diam = 0;
  for (size_t s = 0; s < adj.size(); ++s) {
    for (int d : bfs_distances(adj, int(s))) {
      if (d < 0) return -1;
      if (d > diam) diam = d;
    }
  }
  return diam;
}

}  // namespace eqgeo
