#include "oretough/generate.hpp"

#include <algorithm>
#include <cstdint>

#include "oretough/canonical.hpp"
#include "oretough/errors.hpp"

namespace oretough {

namespace {

Graph augmented(const Graph& parent, VertexSet nbrs) {
  Graph g(parent.order() + 1);
  for (int u = 0; u < parent.order(); ++u)
    for (VertexSet m = parent.neighbors(u) & (bit(u) - 1); m; m &= m - 1)
      g.add_edge(u, std::countr_zero(m));
  for (VertexSet m = nbrs; m; m &= m - 1)
    g.add_edge(parent.order(), std::countr_zero(m));
  return g;
}

}  // namespace

std::vector<Graph> graph_classes(int n, GraphClass cls) {
  if (n < 1 || n > 9) throw BudgetError("graph generation limited to n <= 9");
  bool connected_only = cls != GraphClass::all;

  std::vector<std::uint64_t> keys{0};  // the one-vertex graph
  for (int order = 2; order <= n; ++order) {
    VertexSet first = connected_only ? 1 : 0;
    VertexSet limit = VertexSet{1} << (order - 1);
    std::vector<std::uint64_t> next((keys.size()) * (limit - first));

    std::int64_t parents = static_cast<std::int64_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < parents; ++i) {
      Graph parent = graph_from_key(order - 1, keys[i]);
      std::size_t base = static_cast<std::size_t>(i) * (limit - first);
      for (VertexSet nb = first; nb < limit; ++nb)
        next[base + (nb - first)] = canonical_key(augmented(parent, nb));
    }

    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    keys = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) {
    Graph g = graph_from_key(n, k);
    if (cls == GraphClass::biconnected && !g.is_biconnected()) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace oretough
