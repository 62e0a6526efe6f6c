#pragma once

#include <vector>

#include "oretough/graph.hpp"

namespace oretough {

enum class GraphClass { all, connected, biconnected };

// All isomorphism classes of graphs of order exactly n, one representative
// each, in a deterministic order (sorted by canonical key). Built level by
// level: every graph arises from deleting a vertex of some graph one order
// up, so augmenting each (n-1)-class with every neighborhood for the new
// vertex and deduplicating canonically is exhaustive. For connected classes,
// nonempty neighborhoods suffice because every connected graph keeps a
// spanning tree leaf whose removal preserves connectivity. n <= 9.
std::vector<Graph> graph_classes(int n, GraphClass cls);

}  // namespace oretough
