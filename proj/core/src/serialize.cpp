#include "bcd/serialize.hpp"

#include "bcd/error.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <string_view>
#include <vector>

namespace bcd {
namespace {

using ordered_json = nlohmann::ordered_json;

// %.17g round-trips every double exactly through strtod/from_chars.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw InputError(std::string("bad ") + what + " field: '" + std::string(field) + "'");
    return value;
}

EstimateMode parse_mode(std::string_view s) {
    if (s == "E" || s == "exact") return EstimateMode::Exact;
    if (s == "A" || s == "approximate") return EstimateMode::Approximate;
    throw InputError("unknown mode '" + std::string(s) + "'");
}

} // namespace

const char* mode_name(EstimateMode mode) {
    return mode == EstimateMode::Exact ? "exact" : "approximate";
}

const char* mode_letter(EstimateMode mode) {
    return mode == EstimateMode::Exact ? "E" : "A";
}

std::string to_json(const EstimateRecord& rec) {
    ordered_json j;
    j["target"] = rec.label;
    j["score"] = rec.est.score;
    j["mode"] = mode_name(rec.est.mode);
    j["rv_size"] = rec.est.rv_size;
    j["samples"] = rec.est.samples_used;
    j["rv_seconds"] = rec.est.rv_seconds;
    j["compute_seconds"] = rec.est.compute_seconds;
    if (rec.est.rng_seed)
        j["seed"] = *rec.est.rng_seed;
    else
        j["seed"] = nullptr;
    if (rec.error_pct) j["error"] = *rec.error_pct;
    return j.dump();
}

std::string to_json(const SamplingPlan& plan) {
    ordered_json j;
    j["epsilon"] = plan.epsilon;
    j["delta"] = plan.delta;
    j["k"] = plan.k_bound;
    j["rv_size"] = plan.rv_size;
    j["required_samples"] = plan.required_samples;
    return j.dump();
}

std::string tsv_header() {
    return "vertex\tscore\trv_size\tmode\terror\ttime_seconds\trv_seconds\tsamples\tseed";
}

std::string to_tsv_row(const EstimateRecord& rec) {
    std::string row = std::to_string(rec.label);
    row += '\t';
    row += fmt(rec.est.score);
    row += '\t';
    row += std::to_string(rec.est.rv_size);
    row += '\t';
    row += mode_letter(rec.est.mode);
    row += '\t';
    row += rec.error_pct ? fmt(*rec.error_pct) : "-";
    row += '\t';
    row += fmt(rec.est.compute_seconds);
    row += '\t';
    row += fmt(rec.est.rv_seconds);
    row += '\t';
    row += std::to_string(rec.est.samples_used);
    row += '\t';
    row += rec.est.rng_seed ? std::to_string(*rec.est.rng_seed) : "-";
    return row;
}

std::string plan_tsv_header() {
    return "epsilon\tdelta\tk\trv_size\trequired_samples";
}

std::string to_tsv_row(const SamplingPlan& plan) {
    std::string row = fmt(plan.epsilon);
    row += '\t';
    row += fmt(plan.delta);
    row += '\t';
    row += fmt(plan.k_bound);
    row += '\t';
    row += std::to_string(plan.rv_size);
    row += '\t';
    row += std::to_string(plan.required_samples);
    return row;
}

EstimateRecord record_from_json(const std::string& text) {
    try {
        const auto j = ordered_json::parse(text);
        EstimateRecord rec;
        rec.label = j.at("target").get<std::int64_t>();
        rec.est.score = j.at("score").get<double>();
        rec.est.mode = parse_mode(j.at("mode").get<std::string>());
        rec.est.rv_size = j.at("rv_size").get<VertexId>();
        rec.est.samples_used = j.at("samples").get<std::uint64_t>();
        rec.est.rv_seconds = j.at("rv_seconds").get<double>();
        rec.est.compute_seconds = j.at("compute_seconds").get<double>();
        if (const auto& seed = j.at("seed"); !seed.is_null())
            rec.est.rng_seed = seed.get<std::uint64_t>();
        // json has no NaN; a null error is the undefined-ratio marker
        // (reference score 0, estimate nonzero) coming back in.
        if (j.contains("error"))
            rec.error_pct = j["error"].is_null() ? std::numeric_limits<double>::quiet_NaN()
                                                 : j["error"].get<double>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad estimate json: ") + e.what());
    }
}

EstimateRecord record_from_tsv_row(const std::string& line) {
    const auto f = split_tabs(line);
    if (f.size() != 9)
        throw InputError("estimate row needs 9 tab-separated fields, got " +
                         std::to_string(f.size()));
    EstimateRecord rec;
    rec.label = parse_number<std::int64_t>(f[0], "vertex");
    rec.est.score = parse_number<double>(f[1], "score");
    rec.est.rv_size = parse_number<VertexId>(f[2], "rv_size");
    rec.est.mode = parse_mode(f[3]);
    if (f[4] != "-") rec.error_pct = parse_number<double>(f[4], "error");
    rec.est.compute_seconds = parse_number<double>(f[5], "time_seconds");
    rec.est.rv_seconds = parse_number<double>(f[6], "rv_seconds");
    rec.est.samples_used = parse_number<std::uint64_t>(f[7], "samples");
    if (f[8] != "-") rec.est.rng_seed = parse_number<std::uint64_t>(f[8], "seed");
    return rec;
}

SamplingPlan plan_from_json(const std::string& text) {
    try {
        const auto j = ordered_json::parse(text);
        SamplingPlan plan;
        plan.epsilon = j.at("epsilon").get<double>();
        plan.delta = j.at("delta").get<double>();
        plan.k_bound = j.at("k").get<double>();
        plan.rv_size = j.at("rv_size").get<std::uint64_t>();
        plan.required_samples = j.at("required_samples").get<std::uint64_t>();
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad plan json: ") + e.what());
    }
}

} // namespace bcd
