#include "oretough/graph.hpp"

#include <stdexcept>

namespace oretough {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph: order must be between 1 and 32");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("graph: loops not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::is_complete() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != (vertex_mask() & ~bit(v))) return false;
  return true;
}

bool Graph::is_connected() const { return components().size() == 1; }

bool Graph::is_biconnected() const {
  if (n_ < 3 || !is_connected()) return false;
  for (int v = 0; v < n_; ++v)
    if (components(bit(v)).size() > 1) return false;
  return true;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = vertex_mask() & ~adj_[v] & ~bit(v);
  return g;
}

Graph Graph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("graph: permutation size mismatch");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (VertexSet m = adj_[u]; m; m &= m - 1)
      g.adj_[perm[u]] |= bit(perm[std::countr_zero(m)]);
  return g;
}

std::vector<VertexSet> Graph::components(VertexSet removed) const {
  VertexSet left = vertex_mask() & ~removed;
  std::vector<VertexSet> out;
  while (left) {
    VertexSet comp = left & -left;
    for (;;) {
      VertexSet grown = comp;
      for (VertexSet m = comp; m; m &= m - 1)
        grown |= adj_[std::countr_zero(m)] & left;
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("join: combined order exceeds 32");
  Graph out(n);
  for (int u = 0; u < g.order(); ++u)
    for (VertexSet m = g.neighbors(u) & (bit(u) - 1); m; m &= m - 1)
      out.add_edge(u, std::countr_zero(m));
  for (int u = 0; u < h.order(); ++u)
    for (VertexSet m = h.neighbors(u) & (bit(u) - 1); m; m &= m - 1)
      out.add_edge(g.order() + u, g.order() + std::countr_zero(m));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

// graph6: one byte 63+n for n <= 62, then the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed big-endian six bits per byte, each
// byte offset by 63, final byte zero-padded.
std::string Graph::to_graph6() const {
  std::string out;
  out.push_back(static_cast<char>(63 + n_));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph Graph::parse_graph6(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("graph6: empty token");
  for (char c : token)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte outside printable range 63..126");
  if (token[0] == 126)
    throw std::invalid_argument("graph6: multi-byte order (n > 62) not supported");
  int n = token[0] - 63;
  if (n < 1) throw std::invalid_argument("graph6: order must be positive");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: order exceeds 32-vertex limit");
  int total = n * (n - 1) / 2;
  size_t expect = 1 + static_cast<size_t>((total + 5) / 6);
  if (token.size() != expect)
    throw std::invalid_argument("graph6: token length does not match order");
  Graph g(n);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos) {
      int byte = token[1 + pos / 6] - 63;
      if ((byte >> (5 - pos % 6)) & 1) g.add_edge(i, j);
    }
  for (int pad = total; pad < 6 * static_cast<int>(token.size() - 1); ++pad) {
    int byte = token[1 + pad / 6] - 63;
    if ((byte >> (5 - pad % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace oretough
