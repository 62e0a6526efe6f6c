#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oretough/graph.hpp"

namespace oretough::testutil {

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);     // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);           // spokes
  }
  return g;
}

// Ground-truth isomorphism by trying all n! vertex relabelings; n <= 8.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabelled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Ground-truth independence number by scanning all 2^n subsets.
inline int naive_independence_number(const Graph& g) {
  int n = g.order(), best = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (s & bit(v)) ok = (g.neighbors(v) & s) == 0;
    if (ok) best = std::max(best, set_size(s));
  }
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace oretough::testutil
