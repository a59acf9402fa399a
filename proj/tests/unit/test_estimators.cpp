#include "bcd/dependency.hpp"
#include "bcd/estimators.hpp"
#include "bcd/graph.hpp"
#include "bcd/reachability.hpp"
#include "support/oracle.hpp"
#include "support/random_graph.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

using namespace bcd;

namespace {

// Mean and standard error of scores over `seeds` independent runs.
template <typename Fn>
std::pair<double, double> mean_and_se(std::uint64_t seeds, Fn&& run) {
    std::vector<double> xs(seeds);
    double mean = 0.0;
    for (std::uint64_t s = 0; s < seeds; ++s) {
        xs[s] = run(s);
        mean += xs[s];
    }
    mean /= static_cast<double>(seeds);
    double var = 0.0;
    for (const double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(seeds - 1);
    return {mean, std::sqrt(var / static_cast<double>(seeds))};
}

} // namespace

TEST_SUITE_BEGIN("estimators");

TEST_CASE("exact score of a path middle") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {1, 2}});
    const auto est = ebcd(g, 1);
    CHECK(est.score == 1.0);
    CHECK(est.rv_size == 1);
    CHECK(est.mode == EstimateMode::Exact);
    CHECK(est.samples_used == 0);
    CHECK_FALSE(est.rng_seed.has_value());
}

TEST_CASE("sinks short-circuit without a reach pass") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {1, 2}});
    const auto est = ebcd(g, 2);
    CHECK(est.score == 0.0);
    CHECK(est.rv_size == 0);
    CHECK(est.rv_seconds == 0.0);
    CHECK(est.compute_seconds == 0.0);
}

TEST_CASE("exact scores equal the full pass and the oracle for every vertex") {
    const auto check = [](const DirectedGraph& g) {
        const auto all = betweenness_all(g);
        const auto oracle = bcd::test::compute_oracle(g);
        for (VertexId r = 0; r < g.num_vertices(); ++r) {
            const auto est = ebcd(g, r);
            CHECK(est.score == doctest::Approx(all[r]).epsilon(1e-9));
            CHECK(est.score == doctest::Approx(oracle.bc[r]).epsilon(1e-9));
            CHECK(est.score >= 0.0);
            CHECK(est.rv_size <= g.num_vertices() - 1);
        }
    };
    check(bcd::test::random_digraph(50, 0.08, 51));
    check(bcd::test::random_weighted_digraph(40, 0.1, 4, 52));
}

TEST_CASE("sampling a single-source reach set is exact for any seed") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {1, 2}});
    for (const std::uint64_t seed : {0ull, 1ull, 99ull}) {
        const auto est = abcd(g, 1, 5, seed);
        CHECK(est.score == 1.0);
        CHECK(est.samples_used == 5);
        CHECK(est.mode == EstimateMode::Approximate);
        CHECK(est.rng_seed == seed);
    }
}

TEST_CASE("sampled estimates are unbiased") {
    const auto g = bcd::test::random_digraph(30, 0.12, 53);
    // a target a good share of the graph can reach, so deltas vary
    VertexId r = 0;
    VertexId best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto rs = compute_rv(g, v);
        if (rs.size() > best && g.out_degree(v) > 0) {
            best = rs.size();
            r = v;
        }
    }
    const double exact = ebcd(g, r).score;
    const auto [mean, se] = mean_and_se(
        200, [&](std::uint64_t seed) { return abcd(g, r, 10, seed).score; });
    CHECK(std::abs(mean - exact) <= 3 * se + 1e-12);
}

TEST_CASE("identical inputs give identical bits, whatever the thread count") {
    const auto g = bcd::test::random_digraph(40, 0.1, 54);
    VertexId r = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (compute_rv(g, v).size() > compute_rv(g, r).size()) r = v;
    const auto a = abcd(g, r, 64, 42, 1);
    for (const unsigned threads : {2u, 4u, 7u}) {
        const auto b = abcd(g, r, 64, 42, threads);
        CHECK(a.score == b.score);
        CHECK(a.samples_used == b.samples_used);
    }
    CHECK(ebcd(g, r, 1).score == ebcd(g, r, 4).score);
}

TEST_CASE("empty reach set yields zero with no draws") {
    // 5 has an out-edge but no in-path, so nothing can be sampled.
    const auto g = DirectedGraph::from_edges({{5, 6}, {6, 7}});
    const auto est = abcd(g, *g.vertex_for(5), 10, 1);
    CHECK(est.score == 0.0);
    CHECK(est.samples_used == 0);
    CHECK(est.rv_size == 0);
}

TEST_CASE("threshold dispatch picks exact below and sampling above") {
    const auto g = bcd::test::random_digraph(40, 0.15, 55);
    for (VertexId r = 0; r < g.num_vertices(); ++r) {
        const auto rs = compute_rv(g, r);
        if (g.out_degree(r) == 0 || rs.size() < 2) continue;
        const std::uint64_t tau_small = rs.size() - 1;

        const auto sampled = bcd::bcd(g, r, tau_small, 7);
        CHECK(sampled.mode == EstimateMode::Approximate);
        CHECK(sampled.samples_used == tau_small); // draw count = threshold
        CHECK(sampled.score == abcd(g, r, tau_small, 7).score);

        const auto boundary = bcd::bcd(g, r, rs.size(), 7); // inclusive boundary
        CHECK(boundary.mode == EstimateMode::Exact);
        CHECK(boundary.score == ebcd(g, r).score);
        CHECK_FALSE(boundary.rng_seed.has_value());
    }
}

TEST_CASE("a threshold of at least n-1 is always exact") {
    const auto g = bcd::test::random_digraph(30, 0.1, 56);
    for (VertexId r = 0; r < g.num_vertices(); ++r) {
        const auto est = bcd::bcd(g, r, g.num_vertices() - 1, 3);
        CHECK(est.mode == EstimateMode::Exact);
        CHECK(est.score == ebcd(g, r).score);
    }
}

TEST_CASE("required draw count follows the concentration formula") {
    // ln(20) * 1 * 100 / 2 = 149.787... rounds up to 150
    const auto plan = required_samples(1.0, 0.1, 1.0, 10);
    CHECK(plan.required_samples == 150);
    CHECK(plan.epsilon == 1.0);
    CHECK(plan.rv_size == 10);

    // epsilon tuned so the formula is exactly 1
    const double eps = std::sqrt(std::log(2.0 / 0.5) * 4.0 * 25.0 / 2.0);
    CHECK(required_samples(eps, 0.5, 2.0, 5).required_samples == 1);

    // quadratic growth in the reach-set size
    const auto t1 = required_samples(0.5, 0.1, 2.0, 100).required_samples;
    const auto t2 = required_samples(0.5, 0.1, 2.0, 200).required_samples;
    CHECK(t2 <= 4 * t1);
    CHECK(t2 >= 4 * (t1 - 1));

    CHECK(required_samples(1.0, 0.1, 1.0, 0).required_samples == 1); // floor of one draw
}

TEST_CASE("formula domain is enforced") {
    CHECK_THROWS_AS(required_samples(0.0, 0.1, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(-1.0, 0.1, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 0.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 1.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(required_samples(1.0, 0.1, 0.0, 10), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(required_samples(nan, 0.1, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(abcd(DirectedGraph::from_edges({{0, 1}}), 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bcd::bcd(DirectedGraph::from_edges({{0, 1}}), 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ebcd(DirectedGraph::from_edges({{0, 1}}), 9), std::invalid_argument);
}

TEST_CASE("default dependency bound is the worst case over targets") {
    const auto g = bcd::test::random_digraph(30, 0.1, 57);
    const auto oracle = bcd::test::compute_oracle(g);
    const double k = default_dependency_bound(g);
    CHECK(k == static_cast<double>(g.num_vertices()) - 2.0);
    for (VertexId s = 0; s < g.num_vertices(); ++s)
        for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(oracle.delta[s][v] <= k);
    CHECK(default_dependency_bound(DirectedGraph::from_edges({{0, 1}})) == 1.0);
}

TEST_CASE("whole-graph sampling converges on the path") {
    const auto g = DirectedGraph::from_edges({{0, 1}, {1, 2}});
    const auto est = uniform_source_baseline(g, 1, 4096, 5);
    CHECK(est.score == doctest::Approx(1.0).epsilon(0.15));
    CHECK(est.samples_used == 4096);
    CHECK(est.rv_size == g.num_vertices() - 1); // pool is everything but the target
    const auto [mean, se] = mean_and_se(
        200, [&](std::uint64_t seed) { return uniform_source_baseline(g, 1, 16, seed).score; });
    CHECK(std::abs(mean - 1.0) <= 3 * se + 1e-12);
}

TEST_CASE("reach-set sampling beats whole-graph sampling when few vertices reach the target") {
    // Two chains feed r; a large separate community inflates n but not the
    // reach set, the regime the pruning is designed for.
    std::vector<std::pair<DirectedGraph::Label, DirectedGraph::Label>> edges = {
        {100, 101}, {101, 0}, {102, 0}, {0, 103}};
    for (int i = 0; i < 200; ++i) edges.emplace_back(200 + i, 201 + i);
    const auto g = DirectedGraph::from_edges(edges);
    const VertexId r = *g.vertex_for(0);
    const double exact = ebcd(g, r).score;

    double var_rv = 0.0, var_uni = 0.0;
    const int trials = 200;
    for (int s = 0; s < trials; ++s) {
        const double a = abcd(g, r, 8, static_cast<std::uint64_t>(s)).score - exact;
        const double u =
            uniform_source_baseline(g, r, 8, static_cast<std::uint64_t>(s)).score - exact;
        var_rv += a * a;
        var_uni += u * u;
    }
    CHECK(var_uni >= var_rv);
}

TEST_CASE("percentage error against a reference score") {
    CHECK(empirical_error(0.0, 19613.1) == 100.0);
    CHECK(empirical_error(123.4, 123.4) == 0.0);
    CHECK(*empirical_error(87.96, 80.0) == doctest::Approx(9.95).epsilon(1e-9));
    CHECK(empirical_error(0.0, 0.0) == 0.0);
    CHECK_FALSE(empirical_error(1.0, 0.0).has_value()); // undefined ratio
}

TEST_SUITE_END();
