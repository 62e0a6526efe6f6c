#pragma once

#include <cstdint>
#include <optional>

#include "oretough/conditions.hpp"
#include "oretough/graph.hpp"
#include "oretough/rational.hpp"

namespace oretough {

// The equality family on odd n: any graph on (n-1)/2 vertices joined
// completely to an independent set of (n+1)/2 vertices.
struct ExtremalCertificate {
  VertexSet independent_part;  // (n+1)/2 vertices, pairwise nonadjacent
  VertexSet core_part;         // the other (n-1)/2; every independent vertex sees all of them
};

// Member with core edges chosen by bitmask: bit i = i-th core pair in column
// order (0,1), (0,2), (1,2), (0,3), ... Core vertices come first, the
// independent part after. n odd, 3 <= n <= 23 (the mask has 64 bits).
Graph generate_family(int n, std::uint64_t core_edges);

// Recognizes members structurally (no isomorphism search): for each vertex v
// of degree (n-1)/2, test whether everything outside N(v) has neighborhood
// exactly N(v). Returns the certificate with the smallest independent-part
// bitmask.
std::optional<ExtremalCertificate> membership(const Graph& g);

struct ExtremalReport {
  ExtremalCertificate certificate;
  Rational tau;
  Rational sigma2_value;
  bool hamiltonian;
  Verdict verdict;
  bool tau_expected;       // tau == (n-1)/(n+1)
  bool sigma2_expected;    // sigma2 == n-1
  bool nonhamiltonian;
  bool verdict_equal;
  bool certified() const {
    return tau_expected && sigma2_expected && nonhamiltonian && verdict_equal;
  }
};

// Recomputes the sharpness data of a member from scratch; throws
// std::invalid_argument if g is not in the family.
ExtremalReport certify_extremal_properties(const Graph& g);

}  // namespace oretough
