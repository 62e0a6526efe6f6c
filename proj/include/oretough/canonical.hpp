#pragma once

#include <cstdint>

#include "oretough/graph.hpp"

namespace oretough {

// Canonical key of a graph on n <= 11 vertices: the maximum, over all vertex
// relabellings, of the upper-triangle adjacency bitstring in graph6 column
// order, packed into the low n(n-1)/2 bits of a 64-bit word with the (0,1)
// bit most significant. Equal keys <=> isomorphic graphs.
std::uint64_t canonical_key(const Graph& g);

Graph graph_from_key(int n, std::uint64_t key);

inline Graph canonical_form(const Graph& g) {
  return graph_from_key(g.order(), canonical_key(g));
}

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace oretough
