#pragma once

#include "bcd/spd.hpp"

#include <vector>

namespace bcd {

// Dependency scores of one source on every vertex: delta[v] is the sum over
// targets t of (shortest s->t paths through v) / (shortest s->t paths).
// Entries for vertices unreachable from the source are 0, and delta[source]
// is reported as 0 (a vertex has no dependency on itself).
struct DependencyVector {
    VertexId source = 0;
    std::vector<double> delta;

    double value(VertexId v) const { return delta[v]; }

    // Vertices written by the last accumulation; everything else is 0.
    // Used to reset cheaply when the vector is reused across sources.
    std::vector<VertexId> touched;
};

// Back-propagation over the dag: sweeps the settle order in reverse and,
// for each vertex w and each predecessor v, adds
// (sigma[v]/sigma[w]) * (1 + delta[w]) to delta[v].
// The in-place variant reuses storage across sources with cost proportional
// to the part of the graph the dag reaches.
void accumulate(const ShortestPathDag& dag, DependencyVector& out);
DependencyVector accumulate(const ShortestPathDag& dag);

// delta[r] for one target; convenience accessor so estimators that only
// need a single entry do not have to hold a DependencyVector.
double dependency_on_target(const ShortestPathDag& dag, VertexId r);

// Full Brandes pass: betweenness of every vertex as the sum of per-source
// dependencies.  Raw (unnormalized) scores.  Sources fan out across
// `threads` workers (0 = hardware concurrency) in fixed contiguous blocks
// and the per-worker partials are combined in block order, so results are
// reproducible for a given thread count.
std::vector<double> betweenness_all(const DirectedGraph& g, unsigned threads = 0);

} // namespace bcd
