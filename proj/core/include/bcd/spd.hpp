#pragma once

#include "bcd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace bcd {

// Two tentative weighted distances count as equal when
// |a-b| <= kTieRelTol * max(1, |a|, |b|).  Sums of weights along
// equal-length geodesics can differ in the last few bits, which would
// otherwise split a tie and miscount sigma.  Integer-weight inputs never
// get near the tolerance.  Edge weights are assumed to exceed the
// tolerance scale; weights that small would make "equal distance" an
// intransitive relation and sigma ill-defined.
inline constexpr double kTieRelTol = 1e-9;

inline bool distances_equal(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kTieRelTol * scale;
}

// All shortest paths out of one source, in the form the reverse
// accumulation sweep wants: per-vertex distance, number of shortest paths
// sigma, predecessor lists, and the order vertices were settled in
// (BFS dequeue order or heap pop order; topological for the predecessor
// DAG).  Unreachable vertices keep dist = +inf, sigma = 0, empty preds,
// and do not appear in order.
//
// sigma is a double on purpose: shortest-path counts grow exponentially
// and overflow any integer type on real graphs.  Counts above 2^53 lose
// exactness, which matches the real-valued dependency arithmetic they
// feed into.
struct ShortestPathDag {
    static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

    VertexId source = 0;
    std::vector<double> dist;
    std::vector<double> sigma;
    std::vector<std::vector<VertexId>> preds;
    std::vector<VertexId> order;

    bool reaches(VertexId v) const { return dist[v] != kUnreachable; }
};

// In-place variants reuse the dag's storage across sources: only entries
// touched by the previous build are reset, so the cost of a build is
// proportional to the part of the graph actually reached, not to n.
// A dag object must not be shared between concurrent builds.
void build_spd_unweighted(const DirectedGraph& g, VertexId s, ShortestPathDag& dag);
void build_spd_weighted(const DirectedGraph& g, VertexId s, ShortestPathDag& dag);

ShortestPathDag build_spd_unweighted(const DirectedGraph& g, VertexId s);
ShortestPathDag build_spd_weighted(const DirectedGraph& g, VertexId s);

// Picks the weighted or unweighted construction to match the graph.
void build_spd(const DirectedGraph& g, VertexId s, ShortestPathDag& dag);
ShortestPathDag build_spd(const DirectedGraph& g, VertexId s);

} // namespace bcd
