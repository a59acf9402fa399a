#include "bench/experiment.hpp"

#include "bcd/dependency.hpp"
#include "bcd/error.hpp"
#include "bcd/estimators.hpp"
#include "bcd/reachability.hpp"
#include "bcd/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace bcd::bench {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view field, const char* what) {
    double value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw InputError(std::string("bad ") + what + " value '" + std::string(field) + "'");
    return value;
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.vertices.empty() && cfg.random_set_size == 0)
        throw std::invalid_argument("give either a vertex list or a random-set size");
    if (!cfg.vertices.empty() && cfg.random_set_size != 0)
        throw std::invalid_argument("vertex list and random-set size are mutually exclusive");
    if (cfg.epsilon.has_value() != cfg.delta.has_value())
        throw std::invalid_argument("epsilon and delta must be given together");
    if (cfg.tau == 0) throw std::invalid_argument("tau must be at least 1");
}

std::vector<VertexId> select_targets(const DirectedGraph& g, const ExperimentConfig& cfg) {
    std::vector<VertexId> targets;
    if (!cfg.vertices.empty()) {
        targets.reserve(cfg.vertices.size());
        for (const std::int64_t label : cfg.vertices) {
            const auto v = g.vertex_for(label);
            if (!v) throw InputError("vertex " + std::to_string(label) + " not in graph");
            targets.push_back(*v);
        }
        return targets;
    }

    std::vector<VertexId> pool;
    pool.reserve(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (cfg.include_sinks || g.out_degree(v) > 0) pool.push_back(v);
    if (cfg.random_set_size > pool.size())
        throw std::invalid_argument("random-set size " + std::to_string(cfg.random_set_size) +
                                    " exceeds the " + std::to_string(pool.size()) +
                                    " eligible vertices");

    // Partial Fisher-Yates; the xor decouples this stream from the draws the
    // estimators make with cfg.seed itself.
    CounterRng rng(cfg.seed ^ 0x5e1ec7edu);
    for (std::uint64_t i = 0; i < cfg.random_set_size; ++i) {
        const std::uint64_t j = i + rng.uniform_below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    targets.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(cfg.random_set_size));
    std::sort(targets.begin(), targets.end());
    return targets;
}

BcEstimate run_one(const DirectedGraph& g, VertexId r, const ExperimentConfig& cfg) {
    if (cfg.epsilon) {
        if (g.out_degree(r) == 0) return ebcd(g, r, cfg.threads);
        // A preliminary reach pass sizes the sample budget; the estimator
        // call still measures (and reports) its own.
        const ReachSet pre = compute_rv(g, r);
        if (pre.size() <= cfg.tau) return ebcd(g, r, cfg.threads);
        const double k = cfg.k_override.value_or(default_dependency_bound(g));
        const SamplingPlan plan = required_samples(*cfg.epsilon, *cfg.delta, k, pre.size());
        return abcd(g, r, plan.required_samples, cfg.seed, cfg.threads);
    }
    if (cfg.samples_override) return abcd(g, r, *cfg.samples_override, cfg.seed, cfg.threads);
    return bcd(g, r, cfg.tau, cfg.seed, cfg.threads);
}

} // namespace

SetReport run_vertex_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    const DirectedGraph g = load_edge_list(EdgeListSource::file(cfg.graph_path, cfg.weighted));
    const std::vector<VertexId> targets = select_targets(g, cfg);

    std::vector<double> oracle_bc;
    if (cfg.oracle) oracle_bc = betweenness_all(g, cfg.threads);

    SetReport report;
    report.rows.reserve(targets.size());
    for (const VertexId r : targets) {
        EstimateRecord rec;
        rec.label = g.label_of(r);
        rec.est = run_one(g, r, cfg);
        if (cfg.oracle) {
            // NaN marks "reference is 0 but the estimate is not": the ratio
            // has no value, unlike a plain missing-oracle row.
            const auto err = empirical_error(rec.est.score, oracle_bc[r]);
            rec.error_pct = err ? *err : std::numeric_limits<double>::quiet_NaN();
        }
        report.rows.push_back(std::move(rec));
    }
    refresh_aggregates(report);
    return report;
}

void refresh_aggregates(SetReport& report) {
    report.avg_error.reset();
    report.max_error.reset();
    report.min_error.reset();
    report.total_compute_seconds = 0.0;
    report.total_rv_seconds = 0.0;

    double sum = 0.0;
    std::uint64_t defined = 0;
    for (const EstimateRecord& rec : report.rows) {
        report.total_compute_seconds += rec.est.compute_seconds;
        report.total_rv_seconds += rec.est.rv_seconds;
        if (!rec.error_pct || !std::isfinite(*rec.error_pct)) continue;
        const double e = *rec.error_pct;
        sum += e;
        report.max_error = report.max_error ? std::max(*report.max_error, e) : e;
        report.min_error = report.min_error ? std::min(*report.min_error, e) : e;
        ++defined;
    }
    if (defined > 0) report.avg_error = sum / static_cast<double>(defined);
}

std::string serialize_report(const SetReport& report, OutputFormat format) {
    const auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : "-"; };
    if (format == OutputFormat::Tsv) {
        std::string out = tsv_header();
        out += '\n';
        for (const EstimateRecord& rec : report.rows) {
            out += to_tsv_row(rec);
            out += '\n';
        }
        out += "# avg_error=" + opt(report.avg_error) + "\tmax_error=" + opt(report.max_error) +
               "\tmin_error=" + opt(report.min_error) + '\n';
        out += "# total_compute_seconds=" + fmt(report.total_compute_seconds) +
               "\ttotal_rv_seconds=" + fmt(report.total_rv_seconds) + '\n';
        return out;
    }

    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const EstimateRecord& rec : report.rows)
        j["rows"].push_back(ordered_json::parse(to_json(rec)));
    const auto put = [&j](const char* key, const std::optional<double>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("avg_error", report.avg_error);
    put("max_error", report.max_error);
    put("min_error", report.min_error);
    j["total_compute_seconds"] = report.total_compute_seconds;
    j["total_rv_seconds"] = report.total_rv_seconds;
    std::string out = j.dump();
    out += '\n';
    return out;
}

namespace {

// "# key=value\tkey=value" footer line into the matching report fields.
void parse_footer(std::string_view line, SetReport& report) {
    line.remove_prefix(2);
    while (!line.empty()) {
        const std::size_t tab = line.find('\t');
        const std::string_view pair = line.substr(0, tab);
        line = tab == std::string_view::npos ? std::string_view{} : line.substr(tab + 1);
        const std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos) throw InputError("bad footer entry in report");
        const std::string_view key = pair.substr(0, eq);
        const std::string_view value = pair.substr(eq + 1);
        const auto opt_value = [&]() -> std::optional<double> {
            if (value == "-") return std::nullopt;
            return parse_double(value, "footer");
        };
        if (key == "avg_error")
            report.avg_error = opt_value();
        else if (key == "max_error")
            report.max_error = opt_value();
        else if (key == "min_error")
            report.min_error = opt_value();
        else if (key == "total_compute_seconds")
            report.total_compute_seconds = parse_double(value, "footer");
        else if (key == "total_rv_seconds")
            report.total_rv_seconds = parse_double(value, "footer");
        else
            throw InputError("unknown report footer key '" + std::string(key) + "'");
    }
}

} // namespace

SetReport parse_report(const std::string& text, OutputFormat format) {
    SetReport report;
    if (format == OutputFormat::Json) {
        try {
            const auto j = ordered_json::parse(text);
            for (const auto& row : j.at("rows")) report.rows.push_back(record_from_json(row.dump()));
            const auto opt = [&j](const char* key) -> std::optional<double> {
                const auto& v = j.at(key);
                if (v.is_null()) return std::nullopt;
                return v.get<double>();
            };
            report.avg_error = opt("avg_error");
            report.max_error = opt("max_error");
            report.min_error = opt("min_error");
            report.total_compute_seconds = j.at("total_compute_seconds").get<double>();
            report.total_rv_seconds = j.at("total_rv_seconds").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("bad report json: ") + e.what());
        }
        return report;
    }

    std::string_view rest = text;
    bool saw_header = false;
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            parse_footer(line, report);
        } else if (!saw_header) {
            if (line != tsv_header()) throw InputError("unrecognized report header");
            saw_header = true;
        } else {
            report.rows.push_back(record_from_tsv_row(std::string(line)));
        }
    }
    if (!saw_header) throw InputError("report has no header line");
    return report;
}

} // namespace bcd::bench
