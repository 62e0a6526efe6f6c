#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "oretough/graph.hpp"
#include "oretough/rational.hpp"

namespace oretough {

// A cycle of a host graph with a fixed traversal direction. Validated on
// construction: length >= 3, distinct vertices, consecutive pairs adjacent.
class OrientedCycle {
 public:
  OrientedCycle(const Graph& g, std::vector<int> order);

  int length() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  VertexSet vertex_set() const;
  bool contains(int v) const { return v >= 0 && v < 32 && pos_[v] >= 0; }

  int successor(int v) const;
  int predecessor(int v) const;

  // Inclusive segments. forward_arc(a, b) follows the orientation from a
  // to b; backward_arc(a, b) runs against it.
  std::vector<int> forward_arc(int from, int to) const;
  std::vector<int> backward_arc(int from, int to) const;

  // Rotation starting at the smallest vertex, directed toward its smaller
  // neighbor; equal for equal cycles regardless of representation.
  std::vector<int> canonical_order() const;

  void revalidate(const Graph& g) const;

  bool operator==(const OrientedCycle& other) const { return order_ == other.order_; }

 private:
  std::vector<int> order_;
  std::array<signed char, 32> pos_;
};

// Subset DP over (visited set, endpoint) anchored at vertex 0. n in [3, 24].
std::optional<OrientedCycle> hamilton_cycle(const Graph& g);

// Independent check: depth-first extension with connectivity and degree
// pruning, no shared code with the DP.
std::optional<OrientedCycle> hamilton_backtrack_oracle(const Graph& g);

// Visits every cycle exactly once in canonical order (smallest vertex first,
// then the smaller of its two cycle neighbors). The callback returns false
// to stop early. n <= 14.
void enumerate_cycles(const Graph& g,
                      const std::function<bool(std::span<const int>)>& visit);

// A cycle C is a D_lambda-cycle when every component of G - V(C) has fewer
// than lambda vertices; D_1 is a Hamilton cycle.
struct DCycleReport {
  int lambda;
  std::vector<int> cycle;
  std::vector<int> leftover_profile;  // component orders, ascending
  std::vector<int> c_vector;          // [c_lambda, ..., c_1], c_j = #components of order >= j
};

// Smallest lambda >= 1 admitting a D_lambda-cycle, with a witnessing cycle.
// Throws std::invalid_argument on forests.
DCycleReport smallest_d_lambda(const Graph& g);

// Requires that g has a D_{s+1}-cycle but no D_s-cycle. Among all
// D_{s+1}-cycles, returns the one minimizing (c_s, ..., c_1)
// lexicographically, breaking ties by longest cycle, then smallest
// canonical vertex sequence.
DCycleReport minimizing_d_cycle(const Graph& g, int s);

// Cycle surgery: a program alternates arcs of c with explicit walks through
// other vertices; consecutive steps must be joined by edges and the result
// must close into a cycle visiting no vertex twice.
struct ArcStep {
  int from, to;
  bool forward;
};
struct PathStep {
  std::vector<int> vertices;
};
using SpliceStep = std::variant<ArcStep, PathStep>;

OrientedCycle splice(const Graph& g, const OrientedCycle& c,
                     std::span<const SpliceStep> program);

// Returned by extend_cycle when no extension rule applies: {x} plus the
// successors of x's cycle neighbors form an independent set larger than
// n/(t+1), so the supplied t exceeds the toughness of g.
struct ToughnessContradiction {
  VertexSet independent_set;
};

// Absorbs an off-cycle vertex x with deg(x, c) > n/(t+1) - 1 into c:
// rule A inserts x between consecutive cycle neighbors; rule B reroutes
// through a chord between successors of two cycle neighbors. Scans rule A
// before rule B, candidates in ascending vertex order.
std::variant<OrientedCycle, ToughnessContradiction> extend_cycle(
    const Graph& g, const OrientedCycle& c, int x, const Rational& t);

}  // namespace oretough
