#pragma once

#include "bcd/graph.hpp"
#include "bcd/reachability.hpp"

#include <cstdint>
#include <optional>

namespace bcd {

enum class EstimateMode { Exact, Approximate };

// Result of a single-vertex betweenness computation, with the timing split
// into "finding the candidate sources" and "everything after" since the
// two costs behave very differently.
struct BcEstimate {
    VertexId target = 0;
    double score = 0.0;
    EstimateMode mode = EstimateMode::Exact;
    std::uint64_t samples_used = 0; // 0 when exact
    VertexId rv_size = 0;
    double rv_seconds = 0.0;
    double compute_seconds = 0.0;
    std::optional<std::uint64_t> rng_seed; // absent when exact
};

// Inputs and output of the Hoeffding sample-count formula
//   T = ceil( ln(2/delta) * K^2 * rv_size^2 / (2 * epsilon^2) ),
// guaranteeing additive error <= epsilon with probability >= 1 - delta
// when every per-source dependency on the target is within [0, K].
struct SamplingPlan {
    double epsilon = 0.0;
    double delta = 0.0;
    double k_bound = 0.0;
    std::uint64_t rv_size = 0;
    std::uint64_t required_samples = 0;
};

// Exact betweenness of one vertex: 0 immediately when r has out-degree 0
// (no shortest path leaves r, so none passes through it); otherwise the sum
// of dependency-on-r over every vertex that can reach r.  Sources are
// processed in ascending id order and their contributions summed in that
// order, so the score is bit-reproducible regardless of thread count.
BcEstimate ebcd(const DirectedGraph& g, VertexId r, unsigned threads = 0);

// Sampling estimator: draws `samples` sources i.i.d. uniformly (with
// replacement) from the vertices that reach r and scales the summed
// dependencies by rv_size / samples.  Unbiased, and deterministic given the
// seed: the whole sample list is drawn up front, so parallel execution
// cannot perturb which sources are used, and per-sample results are summed
// in draw order.  Degenerate case: nothing reaches r -> score 0 with
// samples_used 0.
BcEstimate abcd(const DirectedGraph& g, VertexId r, std::uint64_t samples, std::uint64_t seed,
                unsigned threads = 0);

// Threshold dispatcher: computes the reach set once, then runs the exact
// accumulation when its size is <= tau (boundary inclusive) and the
// sampling estimator with samples = tau otherwise.  The reach set is never
// computed twice.
BcEstimate bcd(const DirectedGraph& g, VertexId r, std::uint64_t tau, std::uint64_t seed,
               unsigned threads = 0);

// Evaluates the sample-count formula.  Throws std::invalid_argument unless
// epsilon > 0, 0 < delta < 1 and k_bound > 0.  Result is never below 1.
SamplingPlan required_samples(double epsilon, double delta, double k_bound,
                              std::uint64_t rv_size);

// Largest dependency any single source can have on one vertex: each of the
// at most n-2 other targets contributes at most 1.  Conservative default
// for SamplingPlan's K when no tighter bound is known.
double default_dependency_bound(const DirectedGraph& g);

// Classic comparison point: sources drawn uniformly from all of V \ {r}
// and scaled by (n-1) / samples.  Also unbiased, but its sample-count
// requirement scales with n^2 where the reach-set sampler scales with
// rv_size^2; on graphs where few vertices reach r it wastes almost every
// draw on a zero dependency.
BcEstimate uniform_source_baseline(const DirectedGraph& g, VertexId r, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads = 0);

// |approx - exact| / exact * 100.  When exact == 0 the ratio is undefined:
// returns 0 if approx is also 0, nullopt otherwise.
std::optional<double> empirical_error(double approx, double exact);

} // namespace bcd
