#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oretough/graph.hpp"

namespace oretough {

enum class LemmaId { leftover_order_bound, path_component_degree };

struct LemmaViolation {
  LemmaId lemma;
  std::vector<int> cycle;
  std::string detail;
};

struct LemmaCheckResult {
  bool vacuous;            // the graph is hamiltonian (or nothing qualified)
  int substantive_checks;  // inequality instances actually evaluated
  int tight_checks;        // instances holding with equality
  std::optional<LemmaViolation> violation;
  bool passed() const { return !violation; }
};

// For a non-hamiltonian 2-connected graph with smallest D-cycle level s+1,
// takes the D_{s+1}-cycle C minimizing (c_s, ..., c_1) and verifies, for
// every component H of G - V(C) with d = |N(H)|,
//     n >= (t + |H|) (d + 1),   t = toughness.
// Hamiltonian inputs pass vacuously. 2-connected, n <= 12.
LemmaCheckResult check_leftover_order_bound(const Graph& g);

// With lambda the level such that G has a D_{lambda+1}-cycle but no
// D_lambda-cycle: every cycle C whose leftover components all either have
// order <= lambda-1 or are paths of order >= lambda must leave some path
// component H of order >= lambda containing a vertex x with
//     deg(x, C) <= n/(t+1) - lambda.
// Hamiltonian inputs pass vacuously. 2-connected, n <= 10.
LemmaCheckResult check_path_component_degree(const Graph& g);

}  // namespace oretough
