#include "bcd/dependency.hpp"
#include "bcd/estimators.hpp"
#include "bcd/graph.hpp"
#include "bcd/reachability.hpp"
#include "bcd/rng.hpp"
#include "bcd/spd.hpp"
#include "bench/gadgets.hpp"

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

namespace {

using namespace bcd;

// Erdos-Renyi style digraph, fixed seed so every run measures the same
// instance.
DirectedGraph random_graph(VertexId n, double density, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<std::pair<DirectedGraph::Label, DirectedGraph::Label>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && rng.uniform01() < density) edges.emplace_back(u, v);
    edges.emplace_back(0, 1); // never hand an empty edge list to the builder
    return DirectedGraph::from_edges(edges);
}

void BM_LoadEdgeList(benchmark::State& state) {
    const auto g = random_graph(500, 0.02, 1);
    const std::string text = write_edge_list(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(load_edge_list(EdgeListSource::memory(text)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_LoadEdgeList);

void BM_SpdUnweighted(benchmark::State& state) {
    const auto g = random_graph(static_cast<VertexId>(state.range(0)), 0.02, 2);
    ShortestPathDag dag;
    VertexId s = 0;
    for (auto _ : state) {
        build_spd_unweighted(g, s, dag);
        benchmark::DoNotOptimize(dag.order.data());
        s = (s + 1) % g.num_vertices();
    }
}
BENCHMARK(BM_SpdUnweighted)->Arg(256)->Arg(1024);

void BM_SpdWeighted(benchmark::State& state) {
    const auto base = random_graph(static_cast<VertexId>(state.range(0)), 0.02, 3);
    std::vector<std::tuple<DirectedGraph::Label, DirectedGraph::Label, double>> edges;
    CounterRng rng(4);
    for (VertexId u = 0; u < base.num_vertices(); ++u)
        for (VertexId v : base.out_neighbors(u))
            edges.emplace_back(base.label_of(u), base.label_of(v), 1.0 + rng.uniform01());
    const auto g = DirectedGraph::from_weighted_edges(edges);
    ShortestPathDag dag;
    VertexId s = 0;
    for (auto _ : state) {
        build_spd_weighted(g, s, dag);
        benchmark::DoNotOptimize(dag.order.data());
        s = (s + 1) % g.num_vertices();
    }
}
BENCHMARK(BM_SpdWeighted)->Arg(256)->Arg(1024);

void BM_Accumulate(benchmark::State& state) {
    const auto g = random_graph(1024, 0.02, 5);
    const auto dag = build_spd(g, 0);
    DependencyVector dv;
    for (auto _ : state) {
        accumulate(dag, dv);
        benchmark::DoNotOptimize(dv.delta.data());
    }
}
BENCHMARK(BM_Accumulate);

void BM_ComputeRv(benchmark::State& state) {
    const auto g = random_graph(static_cast<VertexId>(state.range(0)), 0.02, 6);
    VertexId r = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_rv(g, r).members.data());
        r = (r + 1) % g.num_vertices();
    }
}
BENCHMARK(BM_ComputeRv)->Arg(1024)->Arg(4096);

void BM_EbcdFan(benchmark::State& state) {
    const auto g = bench::generate_gadget(bench::GadgetKind::Fan,
                                          static_cast<std::uint64_t>(state.range(0)));
    const VertexId root = *g.vertex_for(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ebcd(g, root, 1).score);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EbcdFan)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

void BM_EbcdBroom(benchmark::State& state) {
    const auto g = bench::generate_gadget(bench::GadgetKind::Broom,
                                          static_cast<std::uint64_t>(state.range(0)));
    const VertexId root = *g.vertex_for(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ebcd(g, root, 1).score);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EbcdBroom)->RangeMultiplier(2)->Range(1 << 8, 1 << 11)->Complexity();

void BM_Abcd(benchmark::State& state) {
    const auto g = random_graph(2048, 0.005, 7);
    const VertexId r = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            abcd(g, r, static_cast<std::uint64_t>(state.range(0)), 42, 1).score);
}
BENCHMARK(BM_Abcd)->Arg(64)->Arg(256);

void BM_BetweennessAll(benchmark::State& state) {
    const auto g = random_graph(512, 0.01, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness_all(g, 1).data());
}
BENCHMARK(BM_BetweennessAll);

} // namespace

BENCHMARK_MAIN();
