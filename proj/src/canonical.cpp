#include "oretough/canonical.hpp"

#include <array>

#include "oretough/errors.hpp"

namespace oretough {

namespace {

constexpr int kKeyLimit = 11;  // 11*10/2 = 55 bits fits a 64-bit key

struct Canonicalizer {
  const Graph& g;
  int n;
  int total_bits;
  std::uint64_t best = 0;
  std::array<int, kKeyLimit> chosen{};

  explicit Canonicalizer(const Graph& graph)
      : g(graph), n(graph.order()), total_bits(graph.order() * (graph.order() - 1) / 2) {}

  // cols[v] holds the partial column for v: its adjacency bits toward the
  // already-placed vertices, earliest placement most significant. Placing a
  // vertex appends its column to the key; since the column occupies the most
  // significant open bits, only candidates with the maximal column can lead
  // to the maximal key. Remaining ties branch, except that "twins" (vertices
  // whose neighborhoods agree off each other) are interchangeable by an
  // automorphism, so one representative suffices.
  void place(int level, std::uint64_t key, int bits, VertexSet remaining,
             const std::array<std::uint16_t, kKeyLimit>& cols) {
    if (!remaining) {
      if (key > best) best = key;
      return;
    }
    std::uint16_t maxcol = 0;
    for (VertexSet m = remaining; m; m &= m - 1)
      if (cols[std::countr_zero(m)] > maxcol) maxcol = cols[std::countr_zero(m)];
    std::uint64_t next_key = (key << level) | maxcol;
    int next_bits = bits + level;
    if (next_key < (best >> (total_bits - next_bits))) return;

    int tried[kKeyLimit];
    int num_tried = 0;
    for (VertexSet m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (cols[v] != maxcol) continue;
      bool twin = false;
      for (int i = 0; i < num_tried && !twin; ++i) {
        int w = tried[i];
        twin = (g.neighbors(v) & ~bit(w)) == (g.neighbors(w) & ~bit(v));
      }
      if (twin) continue;
      tried[num_tried++] = v;

      chosen[level] = v;
      std::array<std::uint16_t, kKeyLimit> next_cols = cols;
      for (VertexSet r = remaining & ~bit(v); r; r &= r - 1) {
        int u = std::countr_zero(r);
        next_cols[u] = static_cast<std::uint16_t>((cols[u] << 1) | (g.adjacent(v, u) ? 1 : 0));
      }
      place(level + 1, next_key, next_bits, remaining & ~bit(v), next_cols);
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > kKeyLimit)
    throw BudgetError("canonical key limited to n <= 11");
  Canonicalizer c(g);
  std::array<std::uint16_t, kKeyLimit> cols{};
  c.place(0, 0, 0, g.vertex_mask(), cols);
  return c.best;
}

Graph graph_from_key(int n, std::uint64_t key) {
  if (n > kKeyLimit) throw BudgetError("canonical key limited to n <= 11");
  Graph g(n);
  int total = n * (n - 1) / 2;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((key >> (total - 1 - pos)) & 1) g.add_edge(i, j);
  return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace oretough
