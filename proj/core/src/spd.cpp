#include "bcd/spd.hpp"

#include <queue>
#include <stdexcept>

namespace bcd {

namespace {

// Reset only what the previous build touched; full init when the dag has
// never seen this graph size.
void prepare(ShortestPathDag& dag, VertexId n, VertexId s) {
    if (dag.dist.size() != n) {
        dag.dist.assign(n, ShortestPathDag::kUnreachable);
        dag.sigma.assign(n, 0.0);
        dag.preds.assign(n, {});
        dag.order.clear();
    } else {
        for (VertexId w : dag.order) {
            dag.dist[w] = ShortestPathDag::kUnreachable;
            dag.sigma[w] = 0.0;
            dag.preds[w].clear();
        }
        dag.order.clear();
    }
    dag.source = s;
    dag.dist[s] = 0.0;
    dag.sigma[s] = 1.0;
}

} // namespace

void build_spd_unweighted(const DirectedGraph& g, VertexId s, ShortestPathDag& dag) {
    const VertexId n = g.num_vertices();
    if (s >= n) throw std::invalid_argument("source vertex out of range");
    prepare(dag, n, s);

    // BFS; order is the dequeue order, which is non-decreasing in dist.
    std::size_t head = 0;
    dag.order.push_back(s);
    while (head < dag.order.size()) {
        const VertexId v = dag.order[head++];
        const double dv = dag.dist[v];
        for (VertexId w : g.out_neighbors(v)) {
            if (dag.dist[w] == ShortestPathDag::kUnreachable) {
                dag.dist[w] = dv + 1.0;
                dag.order.push_back(w);
            }
            if (dag.dist[w] == dv + 1.0) {
                dag.sigma[w] += dag.sigma[v];
                dag.preds[w].push_back(v);
            }
        }
    }
}

void build_spd_weighted(const DirectedGraph& g, VertexId s, ShortestPathDag& dag) {
    const VertexId n = g.num_vertices();
    if (s >= n) throw std::invalid_argument("source vertex out of range");
    prepare(dag, n, s);

    // Lazy-deletion Dijkstra.  A vertex is only re-pushed on a strict
    // (beyond-tolerance) improvement, so its pushed distances strictly
    // decrease and exactly one queue entry ever matches the final dist:
    // the d > dist[v] test discards every stale duplicate.
    using Entry = std::pair<double, VertexId>; // (tentative dist, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0.0, s});

    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dag.dist[v]) continue;
        dag.order.push_back(v);

        const auto nbrs = g.out_neighbors(v);
        const auto wts = g.out_weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const VertexId w = nbrs[i];
            const double nd = dag.dist[v] + wts[i];
            if (dag.dist[w] == ShortestPathDag::kUnreachable ||
                (nd < dag.dist[w] && !distances_equal(nd, dag.dist[w]))) {
                dag.dist[w] = nd;
                dag.sigma[w] = dag.sigma[v];
                dag.preds[w].assign(1, v);
                heap.push({nd, w});
            } else if (distances_equal(nd, dag.dist[w])) {
                dag.sigma[w] += dag.sigma[v];
                dag.preds[w].push_back(v);
            }
        }
    }
}

ShortestPathDag build_spd_unweighted(const DirectedGraph& g, VertexId s) {
    ShortestPathDag dag;
    build_spd_unweighted(g, s, dag);
    return dag;
}

ShortestPathDag build_spd_weighted(const DirectedGraph& g, VertexId s) {
    ShortestPathDag dag;
    build_spd_weighted(g, s, dag);
    return dag;
}

void build_spd(const DirectedGraph& g, VertexId s, ShortestPathDag& dag) {
    if (g.is_weighted())
        build_spd_weighted(g, s, dag);
    else
        build_spd_unweighted(g, s, dag);
}

ShortestPathDag build_spd(const DirectedGraph& g, VertexId s) {
    ShortestPathDag dag;
    build_spd(g, s, dag);
    return dag;
}

} // namespace bcd
