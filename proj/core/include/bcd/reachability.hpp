#pragma once

#include "bcd/graph.hpp"

#include <vector>

namespace bcd {

// The vertices with a directed path to a target r, found by traversing the
// preloaded reverse adjacency from r.  These are exactly the sources whose
// dependency on r can be nonzero, so every single-vertex betweenness
// computation starts here.
struct ReachSet {
    VertexId target = 0;
    std::vector<VertexId> members; // sorted ascending, never contains target
    double rv_seconds = 0.0;       // wall time of the traversal, reported separately

    VertexId size() const { return static_cast<VertexId>(members.size()); }
    bool contains(VertexId v) const;
};

// BFS from r over the reverse adjacency; edge weights are ignored, so the
// cost is linear in the edges touched for weighted and unweighted graphs
// alike.  Iterative BFS rather than DFS: no recursion depth to worry about
// on large graphs and friendlier locality on the compressed arrays.
// Read-only over the graph; concurrent calls are safe.
ReachSet compute_rv(const DirectedGraph& g, VertexId r);

// |members| / |V|, in [0,1].
double rv_ratio(const ReachSet& rs, const DirectedGraph& g);

} // namespace bcd
