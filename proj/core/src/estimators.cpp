#include "bcd/estimators.hpp"

#include "bcd/dependency.hpp"
#include "bcd/parallel.hpp"
#include "bcd/rng.hpp"
#include "bcd/spd.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bcd {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_target(const DirectedGraph& g, VertexId r) {
    if (r >= g.num_vertices()) throw std::invalid_argument("target vertex out of range");
}

// Dependency of each listed source on r, stored per slot and summed in slot
// order afterwards.  A slot's value does not depend on which worker computes
// it or on what ran before (the reused dag/delta workspaces reset to a
// canonical state per build), so the total is bit-identical for every thread
// count.
double summed_dependencies(const DirectedGraph& g, const std::vector<VertexId>& sources,
                           VertexId r, unsigned threads) {
    std::vector<double> slot(sources.size(), 0.0);
    parallel_blocks(sources.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        ShortestPathDag dag;
        DependencyVector dv;
        for (std::uint64_t i = begin; i < end; ++i) {
            build_spd(g, sources[i], dag);
            if (!dag.reaches(r)) continue; // dependency is 0; skip the sweep
            accumulate(dag, dv);
            slot[i] = dv.delta[r];
        }
    });
    double total = 0.0;
    for (double d : slot) total += d;
    return total;
}

void run_exact(const DirectedGraph& g, const ReachSet& rs, unsigned threads, BcEstimate& out) {
    out.mode = EstimateMode::Exact;
    out.rv_size = rs.size();
    out.rv_seconds = rs.rv_seconds;
    const auto t0 = Clock::now();
    out.score = summed_dependencies(g, rs.members, rs.target, threads);
    out.compute_seconds = seconds_since(t0);
}

void run_sampled(const DirectedGraph& g, const ReachSet& rs, std::uint64_t samples,
                 std::uint64_t seed, unsigned threads, BcEstimate& out) {
    out.mode = EstimateMode::Approximate;
    out.rng_seed = seed;
    out.rv_size = rs.size();
    out.rv_seconds = rs.rv_seconds;
    const auto t0 = Clock::now();
    if (rs.members.empty()) { // no source reaches r, nothing to draw from
        out.compute_seconds = seconds_since(t0);
        return;
    }
    CounterRng rng(seed);
    std::vector<VertexId> picks(samples);
    for (auto& p : picks) p = rs.members[rng.uniform_below(rs.members.size())];
    const double sum = summed_dependencies(g, picks, rs.target, threads);
    // Single final scaling rather than scaling each increment: algebraically
    // identical, fewer roundings.
    out.score = static_cast<double>(rs.size()) / static_cast<double>(samples) * sum;
    out.samples_used = samples;
    out.compute_seconds = seconds_since(t0);
}

} // namespace

BcEstimate ebcd(const DirectedGraph& g, VertexId r, unsigned threads) {
    check_target(g, r);
    BcEstimate out;
    out.target = r;
    out.mode = EstimateMode::Exact;
    if (g.out_degree(r) == 0) return out; // no shortest path passes through a sink
    const ReachSet rs = compute_rv(g, r);
    run_exact(g, rs, threads, out);
    return out;
}

BcEstimate abcd(const DirectedGraph& g, VertexId r, std::uint64_t samples, std::uint64_t seed,
                unsigned threads) {
    check_target(g, r);
    if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
    BcEstimate out;
    out.target = r;
    out.mode = EstimateMode::Approximate;
    out.rng_seed = seed;
    if (g.out_degree(r) == 0) return out;
    const ReachSet rs = compute_rv(g, r);
    run_sampled(g, rs, samples, seed, threads, out);
    return out;
}

BcEstimate bcd(const DirectedGraph& g, VertexId r, std::uint64_t tau, std::uint64_t seed,
               unsigned threads) {
    check_target(g, r);
    if (tau == 0) throw std::invalid_argument("tau must be at least 1");
    BcEstimate out;
    out.target = r;
    out.mode = EstimateMode::Exact;
    if (g.out_degree(r) == 0) return out;
    const ReachSet rs = compute_rv(g, r);
    if (rs.size() <= tau) // boundary inclusive: a reach set of exactly tau stays exact
        run_exact(g, rs, threads, out);
    else
        run_sampled(g, rs, tau, seed, threads, out);
    return out;
}

SamplingPlan required_samples(double epsilon, double delta, double k_bound,
                              std::uint64_t rv_size) {
    // Negated comparisons so NaN arguments are rejected too.
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
    if (!(k_bound > 0.0)) throw std::invalid_argument("dependency bound must be positive");
    SamplingPlan plan;
    plan.epsilon = epsilon;
    plan.delta = delta;
    plan.k_bound = k_bound;
    plan.rv_size = rv_size;
    const double rv = static_cast<double>(rv_size);
    const double t =
        std::log(2.0 / delta) * k_bound * k_bound * rv * rv / (2.0 * epsilon * epsilon);
    plan.required_samples = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(t)));
    return plan;
}

double default_dependency_bound(const DirectedGraph& g) {
    // Clamped to 1 so the bound stays usable (positive) on graphs too small
    // for any vertex to lie between two others; still conservative there.
    return std::max(1.0, static_cast<double>(g.num_vertices()) - 2.0);
}

BcEstimate uniform_source_baseline(const DirectedGraph& g, VertexId r, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads) {
    check_target(g, r);
    if (samples == 0) throw std::invalid_argument("sample count must be at least 1");
    const VertexId n = g.num_vertices();
    BcEstimate out;
    out.target = r;
    out.mode = EstimateMode::Approximate;
    out.rng_seed = seed;
    if (n < 2) return out; // no vertex besides r exists
    out.rv_size = n - 1;   // the sampling pool here is all of V \ {r}
    const auto t0 = Clock::now();
    CounterRng rng(seed);
    std::vector<VertexId> picks(samples);
    for (auto& p : picks) {
        const auto idx = static_cast<VertexId>(rng.uniform_below(n - 1));
        p = idx >= r ? idx + 1 : idx; // skip over the excluded target
    }
    const double sum = summed_dependencies(g, picks, r, threads);
    out.score = static_cast<double>(n - 1) / static_cast<double>(samples) * sum;
    out.samples_used = samples;
    out.compute_seconds = seconds_since(t0);
    return out;
}

std::optional<double> empirical_error(double approx, double exact) {
    if (exact == 0.0) {
        if (approx == 0.0) return 0.0;
        return std::nullopt; // nonzero estimate of a zero score: ratio undefined
    }
    return std::abs(approx - exact) / std::abs(exact) * 100.0;
}

} // namespace bcd
