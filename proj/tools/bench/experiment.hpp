#pragma once

#include "bcd/graph.hpp"
#include "bcd/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bcd::bench {

enum class OutputFormat { Tsv, Json };

// One per-vertex experiment over a graph file: which vertices to run, how to
// compute each score, and what to report.  Exactly one of `vertices` /
// `random_set_size` selects the targets.
struct ExperimentConfig {
    std::string graph_path;
    bool weighted = false;

    std::vector<std::int64_t> vertices; // labels as they appear in the file
    std::uint64_t random_set_size = 0;  // used when `vertices` is empty

    std::uint64_t tau = 1000;
    std::uint64_t seed = 0;
    // Forces the sampling path with this draw count instead of the
    // threshold dispatch.
    std::optional<std::uint64_t> samples_override;
    // When both are set, the draw count comes from the concentration-bound
    // formula evaluated per target (with k_override or the conservative
    // default bound); the threshold still decides exact vs sampled.
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<double> k_override;

    OutputFormat format = OutputFormat::Tsv;
    // Compute the full exact score vector once and attach an error
    // percentage to every row.
    bool oracle = false;
    // Random sets skip vertices of out-degree 0 by default; their score is
    // always 0, which would pad the error statistics with trivial rows.
    bool include_sinks = false;
    unsigned threads = 0;
};

// Rows plus the aggregate columns of the per-set result tables.  Aggregates
// cover rows whose error is defined; they are absent when no row has one
// (oracle off, or every reference score was 0 with a nonzero estimate).
struct SetReport {
    std::vector<EstimateRecord> rows;
    std::optional<double> avg_error;
    std::optional<double> max_error;
    std::optional<double> min_error;
    double total_compute_seconds = 0.0;
    double total_rv_seconds = 0.0;
};

// Runs one estimate per selected vertex, sequentially so per-row timings do
// not contend.  Scores and sample counts are fully determined by (config,
// graph); only the timing fields vary between runs.
// Throws InputError for unreadable graphs and unknown vertex labels,
// std::invalid_argument for inconsistent config.
SetReport run_vertex_experiment(const ExperimentConfig& cfg);

// Recomputes avg/max/min/totals from the rows (used after parsing and by
// consistency checks).
void refresh_aggregates(SetReport& report);

// File representations.  TSV: header, one row per estimate, then '#'
// footer lines carrying the aggregates.  JSON: one object with a rows
// array and the aggregate fields.  Both parse back losslessly.
std::string serialize_report(const SetReport& report, OutputFormat format);
SetReport parse_report(const std::string& text, OutputFormat format);

} // namespace bcd::bench
