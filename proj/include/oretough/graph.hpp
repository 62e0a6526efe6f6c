#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oretough {

// Vertex subset as a bitmask, bit v = vertex v.
using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

// Simple undirected graph on at most 32 vertices, adjacency rows as bitmasks.
// Instances are cheap values; treat them as immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph parse_graph6(std::string_view token);

  int order() const { return n_; }
  int size() const;  // number of edges

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  void add_edge(int u, int v);
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertex_mask() const {
    return n_ == 32 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  bool is_complete() const;
  bool is_connected() const;
  bool is_biconnected() const;  // 2-connected: n >= 3, connected, no cutvertex

  Graph complement() const;
  Graph relabelled(std::span<const int> perm) const;  // vertex v -> perm[v]

  // Connected components of the subgraph induced on V minus `removed`,
  // ordered by their lowest vertex.
  std::vector<VertexSet> components(VertexSet removed = 0) const;

  std::string to_graph6() const;

  bool operator==(const Graph& other) const;

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph join(const Graph& g, const Graph& h);

}  // namespace oretough
