#pragma once

#include <optional>

#include "oretough/graph.hpp"
#include "oretough/rational.hpp"

namespace oretough {

struct ToughnessWitness {
  VertexSet cutset;     // S with c(G-S) >= 2 attaining the minimum ratio
  int component_count;  // c(G-S), always >= 2
};

struct ToughnessResult {
  Rational value;
  std::optional<ToughnessWitness> witness;  // absent iff complete
};

// Exact toughness: min |S|/c(G-S) over cutsets S with c(G-S) >= 2.
// Complete graphs have no such S, value infinity; disconnected graphs get 0
// with the empty cutset. The witness is the minimizing cutset with the
// numerically smallest bitmask. Enumerates cutsets by increasing size and
// stops once |S|/(n-|S|), a lower bound on any ratio at that size, exceeds
// the incumbent.
ToughnessResult toughness_exact(const Graph& g);

// Independent check: scan every one of the 2^n subsets, no ordering, no
// pruning. n <= 16.
Rational toughness_naive_oracle(const Graph& g);

struct ToughnessCheck {
  bool tough;
  std::optional<ToughnessWitness> violation;  // some S with |S| < t * c(G-S)
};

ToughnessCheck is_t_tough(const Graph& g, const Rational& t);

}  // namespace oretough
