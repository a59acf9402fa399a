#include "bcd/graph.hpp"
#include "bcd/spd.hpp"
#include "support/oracle.hpp"
#include "support/random_graph.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>
#include <vector>

using namespace bcd;

namespace {

std::vector<VertexId> sorted_preds(const ShortestPathDag& dag, VertexId w) {
    std::vector<VertexId> p(dag.preds[w].begin(), dag.preds[w].end());
    std::sort(p.begin(), p.end());
    return p;
}

// Structural checks every dag must satisfy, against its own graph.
void check_invariants(const DirectedGraph& g, const ShortestPathDag& dag) {
    const VertexId n = g.num_vertices();
    REQUIRE(dag.dist.size() == n);
    CHECK(dag.dist[dag.source] == 0.0);
    CHECK(dag.sigma[dag.source] == 1.0);

    std::vector<std::size_t> pos(n, SIZE_MAX);
    for (std::size_t i = 0; i < dag.order.size(); ++i) pos[dag.order[i]] = i;

    for (VertexId w = 0; w < n; ++w) {
        if (!dag.reaches(w)) {
            CHECK(dag.sigma[w] == 0.0);
            CHECK(dag.preds[w].empty());
            CHECK(pos[w] == SIZE_MAX);
            continue;
        }
        CHECK(pos[w] != SIZE_MAX);
        double from_preds = 0.0;
        for (const VertexId v : dag.preds[w]) {
            // predecessor edges exist and lie on shortest paths
            const auto neigh = g.out_neighbors(v);
            const auto it = std::lower_bound(neigh.begin(), neigh.end(), w);
            REQUIRE((it != neigh.end() && *it == w));
            double wt = 1.0;
            if (g.is_weighted()) wt = g.out_weights(v)[static_cast<std::size_t>(it - neigh.begin())];
            CHECK(distances_equal(dag.dist[w], dag.dist[v] + wt));
            CHECK(pos[v] < pos[w]); // settle order is topological for the dag
            from_preds += dag.sigma[v];
        }
        if (w != dag.source) CHECK(dag.sigma[w] == from_preds);
    }
}

} // namespace

TEST_SUITE_BEGIN("spd");

TEST_CASE("unweighted path") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {1, 2}});
    const auto dag = build_spd_unweighted(g, 0);
    CHECK(dag.dist == std::vector<double>{0, 1, 2});
    CHECK(dag.sigma == std::vector<double>{1, 1, 1});
    CHECK(sorted_preds(dag, 2) == std::vector<VertexId>{1});
    check_invariants(g, dag);
}

TEST_CASE("diamond counts both geodesics") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const auto dag = build_spd_unweighted(g, 0);
    CHECK(dag.sigma[3] == 2.0);
    CHECK(sorted_preds(dag, 3) == std::vector<VertexId>{1, 2});
    check_invariants(g, dag);
}

TEST_CASE("weighted path distances are weight sums") {
    const auto g = DirectedGraph::from_weighted_edges({{0, 1, 1.5}, {1, 2, 2.5}});
    const auto dag = build_spd_weighted(g, 0);
    CHECK(dag.dist == std::vector<double>{0.0, 1.5, 4.0});
    CHECK(dag.sigma == std::vector<double>{1, 1, 1});
    check_invariants(g, dag);
}

TEST_CASE("weighted tie merges predecessor sets") {
    const auto g = DirectedGraph::from_weighted_edges({{0, 1, 1}, {1, 2, 1}, {0, 2, 2}});
    const auto dag = build_spd_weighted(g, 0);
    CHECK(dag.sigma[2] == 2.0);
    CHECK(sorted_preds(dag, 2) == std::vector<VertexId>{0, 1});
    check_invariants(g, dag);
}

TEST_CASE("near-equal weight sums still count as one distance") {
    // 0.1+0.2 != 0.3 exactly in binary; the tolerance must bridge it.
    const auto g =
        DirectedGraph::from_weighted_edges({{0, 1, 0.1}, {1, 2, 0.2}, {0, 2, 0.3}});
    const auto dag = build_spd_weighted(g, 0);
    CHECK(dag.sigma[2] == 2.0);
    CHECK(sorted_preds(dag, 2) == std::vector<VertexId>{0, 1});
}

TEST_CASE("unreachable vertices keep sentinel state") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {2, 3}});
    const auto dag = build_spd(g, 0);
    CHECK(dag.dist[2] == ShortestPathDag::kUnreachable);
    CHECK(dag.dist[3] == ShortestPathDag::kUnreachable);
    CHECK(std::find(dag.order.begin(), dag.order.end(), 2) == dag.order.end());
    check_invariants(g, dag);
}

TEST_CASE("unweighted sigma and dist match the enumeration oracle") {
    const auto g = bcd::test::random_digraph(30, 0.12, 21);
    const auto oracle = bcd::test::compute_oracle(g);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        const auto dag = build_spd_unweighted(g, s);
        check_invariants(g, dag);
        for (VertexId t = 0; t < g.num_vertices(); ++t) {
            CHECK(dag.dist[t] == (oracle.dist[s][t] == std::numeric_limits<double>::infinity()
                                      ? ShortestPathDag::kUnreachable
                                      : oracle.dist[s][t]));
            if (t != s) CHECK(dag.sigma[t] == doctest::Approx(oracle.sigma[s][t]).epsilon(1e-12));
        }
    }
}

TEST_CASE("weighted sigma matches the enumeration oracle") {
    const auto g = bcd::test::random_weighted_digraph(30, 0.12, 4, 22);
    const auto oracle = bcd::test::compute_oracle(g);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        const auto dag = build_spd_weighted(g, s);
        check_invariants(g, dag);
        for (VertexId t = 0; t < g.num_vertices(); ++t) {
            if (t == s) continue;
            if (oracle.dist[s][t] == std::numeric_limits<double>::infinity()) {
                CHECK_FALSE(dag.reaches(t));
            } else {
                CHECK(dag.dist[t] == doctest::Approx(oracle.dist[s][t]).epsilon(1e-12));
                CHECK(dag.sigma[t] == doctest::Approx(oracle.sigma[s][t]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("unit weights reproduce the unweighted dag exactly") {
    // Build both graphs from the same label sequence so their internal ids
    // coincide and the DAG fields are directly comparable.
    const auto src = bcd::test::random_digraph(25, 0.15, 23);
    std::vector<std::pair<DirectedGraph::Label, DirectedGraph::Label>> pairs;
    std::vector<std::tuple<DirectedGraph::Label, DirectedGraph::Label, double>> unit;
    for (VertexId u = 0; u < src.num_vertices(); ++u)
        for (VertexId v : src.out_neighbors(u)) {
            pairs.emplace_back(src.label_of(u), src.label_of(v));
            unit.emplace_back(src.label_of(u), src.label_of(v), 1.0);
        }
    const auto base = DirectedGraph::from_edges(pairs);
    const auto weighted = DirectedGraph::from_weighted_edges(unit);
    for (VertexId s = 0; s < base.num_vertices(); ++s) {
        const auto a = build_spd_unweighted(base, s);
        const auto b = build_spd_weighted(weighted, s);
        CHECK(a.dist == b.dist);
        CHECK(a.sigma == b.sigma);
        for (VertexId w = 0; w < base.num_vertices(); ++w)
            CHECK(sorted_preds(a, w) == sorted_preds(b, w));
    }
}

TEST_CASE("dispatch follows the graph's weighting") {
    const auto uw = DirectedGraph::from_edges({{0, 1}});
    const auto w = DirectedGraph::from_weighted_edges({{0, 1, 2.0}});
    CHECK(build_spd(uw, 0).dist[1] == 1.0);
    CHECK(build_spd(w, 0).dist[1] == 2.0);
}

TEST_CASE("reused workspace equals a fresh build") {
    const auto g = bcd::test::random_digraph(40, 0.1, 24);
    ShortestPathDag reused;
    for (VertexId s = 0; s < g.num_vertices(); s += 3) {
        build_spd(g, s, reused);
        const auto fresh = build_spd(g, s);
        CHECK(reused.dist == fresh.dist);
        CHECK(reused.sigma == fresh.sigma);
        CHECK(reused.order == fresh.order);
        for (VertexId w = 0; w < g.num_vertices(); ++w)
            CHECK(reused.preds[w] == fresh.preds[w]);
    }
}

TEST_SUITE_END();
