#include "bcd/dependency.hpp"

#include "bcd/parallel.hpp"

#include <stdexcept>

namespace bcd {

void accumulate(const ShortestPathDag& dag, DependencyVector& out) {
    const std::size_t n = dag.dist.size();
    if (out.delta.size() != n) {
        out.delta.assign(n, 0.0);
        out.touched.clear();
    } else {
        for (VertexId w : out.touched) out.delta[w] = 0.0;
    }
    out.source = dag.source;

    // Reverse settle order is a reverse topological order of the
    // predecessor DAG, so delta[w] is final when w is processed.
    for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
        const VertexId w = *it;
        const double coef = (1.0 + out.delta[w]) / dag.sigma[w];
        for (VertexId v : dag.preds[w]) out.delta[v] += dag.sigma[v] * coef;
    }
    out.delta[dag.source] = 0.0; // scratch value; a vertex has no dependency on itself
    out.touched = dag.order;
}

DependencyVector accumulate(const ShortestPathDag& dag) {
    DependencyVector out;
    accumulate(dag, out);
    return out;
}

double dependency_on_target(const ShortestPathDag& dag, VertexId r) {
    if (r >= dag.dist.size()) throw std::invalid_argument("target vertex out of range");
    if (!dag.reaches(r)) return 0.0;
    DependencyVector scratch;
    accumulate(dag, scratch);
    return scratch.delta[r];
}

std::vector<double> betweenness_all(const DirectedGraph& g, unsigned threads) {
    const VertexId n = g.num_vertices();
    threads = resolve_threads(threads);

    // One private score vector per contiguous source block; blocks are
    // summed in index order afterwards so the result does not depend on
    // scheduling.
    std::vector<std::vector<double>> partial(threads);

    parallel_blocks(n, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        std::vector<double>& bc = partial[worker];
        bc.assign(n, 0.0);
        ShortestPathDag dag;
        DependencyVector dv;
        for (std::uint64_t s = begin; s < end; ++s) {
            build_spd(g, static_cast<VertexId>(s), dag);
            accumulate(dag, dv);
            for (VertexId w : dv.touched) bc[w] += dv.delta[w];
        }
    });

    std::vector<double> bc(n, 0.0);
    for (const auto& p : partial) {
        if (p.empty()) continue;
        for (VertexId v = 0; v < n; ++v) bc[v] += p[v];
    }
    return bc;
}

} // namespace bcd
