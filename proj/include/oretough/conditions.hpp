#pragma once

#include <optional>

#include "oretough/graph.hpp"
#include "oretough/rational.hpp"

namespace oretough {

// Minimum degree sum over nonadjacent vertex pairs; infinity iff complete.
Rational sigma2(const Graph& g);

int min_degree(const Graph& g);

enum class BoundKind { main, bauer, ore, dirac };
enum class Verdict { greater, equal, less, vacuous };

// Thresholds, with t the toughness and n the order:
//   main:  sigma2 vs 2n/(t+1) - 2      bauer: delta vs n/(t+1) - 1
//   ore:   sigma2 vs n                 dirac: delta vs n/2
struct BoundComparison {
  BoundKind kind;
  Rational lhs;
  std::optional<Rational> rhs;  // absent when the graph is complete
  Verdict verdict;
};

// Exact comparison of sigma2 against 2n/(t+1) - 2 by cross-multiplication.
// Vacuous when t = 0 (disconnected) or sigma2 is infinite (complete).
BoundComparison compare_main_bound(const Rational& sigma2_value,
                                   const Rational& tau, int n);

BoundComparison compare_bound(BoundKind kind, const Graph& g, const Rational& tau);

const char* verdict_name(Verdict v);

// Maximum independent set size, branch and bound with a greedy clique-cover
// upper bound. Optionally reports one maximum independent set.
int independence_number(const Graph& g, VertexSet* witness = nullptr);

// Checks the independent-set ratio bound: alpha(G) <= n/(t+1) for every
// noncomplete graph with toughness t > 0.
struct IndependenceBoundReport {
  bool holds;
  bool tight;  // alpha equals n/(t+1) exactly
  int alpha;
  Rational bound;
  std::optional<VertexSet> violating_set;
};

IndependenceBoundReport check_independent_set_bound(const Graph& g);

}  // namespace oretough
