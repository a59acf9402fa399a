#include "bcd/dependency.hpp"
#include "bcd/error.hpp"
#include "bcd/estimators.hpp"
#include "bcd/graph.hpp"
#include "bcd/reachability.hpp"
#include "bcd/serialize.hpp"
#include "bench/experiment.hpp"
#include "bench/gadgets.hpp"
#include "bench/scaling.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using bcd::bench::OutputFormat;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

OutputFormat parse_format(const std::string& name) {
    return name == "json" ? OutputFormat::Json : OutputFormat::Tsv;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw bcd::InputError("cannot open output file " + out_path);
    f << text;
    if (!f) throw bcd::InputError("failed writing " + out_path);
}

bcd::DirectedGraph load(const std::string& path, bool weighted) {
    return bcd::load_edge_list(bcd::EdgeListSource::file(path, weighted));
}

bcd::VertexId need_vertex(const bcd::DirectedGraph& g, std::int64_t label) {
    const auto v = g.vertex_for(label);
    if (!v) throw bcd::InputError("vertex " + std::to_string(label) + " not in graph");
    return *v;
}

std::string render_record(const bcd::EstimateRecord& rec, OutputFormat format) {
    if (format == OutputFormat::Json) return bcd::to_json(rec) + "\n";
    return bcd::tsv_header() + "\n" + bcd::to_tsv_row(rec) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-vertex betweenness centrality via reachability pruning"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    std::string graph_path;
    std::string out_path;
    std::string format_name = "tsv";
    bool weighted = false;
    std::int64_t vertex_label = 0;
    unsigned threads = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t tau = 1000;

    const auto add_common = [&](CLI::App* sub, bool with_vertex) {
        sub->add_option("graph", graph_path, "edge-list file")->required();
        if (with_vertex) sub->add_option("vertex", vertex_label, "target vertex label")->required();
        sub->add_flag("--weighted", weighted, "parse a third column as positive edge weights");
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write results to this file instead of stdout");
    };

    CLI::App* rv = app.add_subcommand("rv", "vertices with a directed path to the target");
    add_common(rv, true);
    bool rv_members = false;
    rv->add_flag("--members", rv_members, "also list the member vertices");

    CLI::App* exact = app.add_subcommand("exact", "exact single-vertex score");
    add_common(exact, true);
    exact->add_option("--threads", threads, "worker threads (0 = all cores)");

    CLI::App* approx = app.add_subcommand("approx", "sampled single-vertex estimate");
    add_common(approx, true);
    approx->add_option("--samples", samples, "number of sampled sources")->required();
    approx->add_option("--seed", seed, "rng seed")->capture_default_str();
    approx->add_option("--threads", threads, "worker threads (0 = all cores)");

    CLI::App* dispatch = app.add_subcommand(
        "bcd", "per-vertex experiment: exact when few vertices reach the target, sampled otherwise");
    std::vector<std::int64_t> vertex_labels;
    std::uint64_t random_set = 0;
    bool oracle = false;
    bool include_sinks = false;
    std::optional<std::uint64_t> samples_override;
    std::optional<double> epsilon, delta, k_override;
    dispatch->add_option("graph", graph_path, "edge-list file")->required();
    dispatch->add_option("vertex", vertex_labels, "target vertex labels");
    dispatch->add_option("--random-set", random_set, "run this many randomly chosen vertices");
    dispatch->add_flag("--weighted", weighted, "parse a third column as positive edge weights");
    dispatch->add_option("--tau", tau, "exact/sampled threshold on reach-set size")
        ->capture_default_str();
    dispatch->add_option("--seed", seed, "rng seed")->capture_default_str();
    dispatch->add_option("--samples", samples_override, "force sampling with this draw count");
    dispatch->add_option("--epsilon", epsilon, "additive error target (with --delta)");
    dispatch->add_option("--delta", delta, "failure probability (with --epsilon)");
    dispatch->add_option("--k", k_override, "dependency bound for the sample-count formula");
    dispatch->add_flag("--oracle", oracle, "attach error columns from a full exact pass");
    dispatch->add_flag("--include-sinks", include_sinks,
                       "let random sets include vertices with out-degree 0");
    dispatch->add_option("--threads", threads, "worker threads (0 = all cores)");
    dispatch->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    dispatch->add_option("--out", out_path, "write results to this file instead of stdout");

    CLI::App* all = app.add_subcommand("all", "exact scores of every vertex");
    all->add_option("graph", graph_path, "edge-list file")->required();
    all->add_flag("--weighted", weighted, "parse a third column as positive edge weights");
    all->add_option("--threads", threads, "worker threads (0 = all cores)");
    all->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    all->add_option("--out", out_path, "write results to this file instead of stdout");

    CLI::App* gadget = app.add_subcommand("gadget", "synthetic scaling graphs");
    std::string kind_name;
    std::uint64_t gadget_n = 0;
    std::vector<std::uint64_t> time_sizes;
    unsigned repeats = 3;
    gadget->add_option("--kind", kind_name, "fan or broom")
        ->required()
        ->check(CLI::IsMember({"fan", "broom"}));
    CLI::Option* n_opt = gadget->add_option("--n", gadget_n, "size parameter (graph gets n+2 vertices)");
    gadget
        ->add_option("--time", time_sizes,
                     "instead of emitting a graph, time the exact computation at these sizes")
        ->delimiter(',')
        ->excludes(n_opt);
    gadget->add_option("--repeats", repeats, "timing repetitions per size (best kept)")
        ->capture_default_str();
    gadget->add_option("--out", out_path, "write results to this file instead of stdout");

    CLI::App* plan = app.add_subcommand("plan", "sample count for an error/confidence target");
    double plan_epsilon = 0, plan_delta = 0, plan_k = 0;
    std::uint64_t plan_rv = 0;
    plan->add_option("--epsilon", plan_epsilon, "additive error target")->required();
    plan->add_option("--delta", plan_delta, "failure probability")->required();
    plan->add_option("--k", plan_k, "upper bound on any single-source dependency")->required();
    plan->add_option("--rv", plan_rv, "reach-set size")->required();
    plan->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    plan->add_option("--out", out_path, "write results to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit cleanly, bad usage is a config error
    }

    try {
        const OutputFormat format = parse_format(format_name);

        if (*rv) {
            const auto g = load(graph_path, weighted);
            const auto rs = bcd::compute_rv(g, need_vertex(g, vertex_label));
            std::string out;
            if (format == OutputFormat::Json) {
                nlohmann::ordered_json j;
                j["target"] = vertex_label;
                j["rv_size"] = rs.size();
                j["rv_seconds"] = rs.rv_seconds;
                j["ratio"] = bcd::rv_ratio(rs, g);
                if (rv_members) {
                    auto& m = j["members"] = nlohmann::ordered_json::array();
                    for (const bcd::VertexId v : rs.members) m.push_back(g.label_of(v));
                }
                out = j.dump() + "\n";
            } else {
                out = "vertex\trv_size\trv_seconds\tratio\n" + std::to_string(vertex_label) + "\t" +
                      std::to_string(rs.size()) + "\t" + fmt(rs.rv_seconds) + "\t" +
                      fmt(bcd::rv_ratio(rs, g)) + "\n";
                if (rv_members)
                    for (const bcd::VertexId v : rs.members)
                        out += "# member\t" + std::to_string(g.label_of(v)) + "\n";
            }
            emit(out, out_path);
        } else if (*exact) {
            const auto g = load(graph_path, weighted);
            const auto r = need_vertex(g, vertex_label);
            emit(render_record({vertex_label, bcd::ebcd(g, r, threads), std::nullopt}, format),
                 out_path);
        } else if (*approx) {
            const auto g = load(graph_path, weighted);
            const auto r = need_vertex(g, vertex_label);
            emit(render_record({vertex_label, bcd::abcd(g, r, samples, seed, threads), std::nullopt},
                               format),
                 out_path);
        } else if (*dispatch) {
            bcd::bench::ExperimentConfig cfg;
            cfg.graph_path = graph_path;
            cfg.weighted = weighted;
            cfg.vertices = vertex_labels;
            cfg.random_set_size = random_set;
            cfg.tau = tau;
            cfg.seed = seed;
            cfg.samples_override = samples_override;
            cfg.epsilon = epsilon;
            cfg.delta = delta;
            cfg.k_override = k_override;
            cfg.format = format;
            cfg.oracle = oracle;
            cfg.include_sinks = include_sinks;
            cfg.threads = threads;
            emit(bcd::bench::serialize_report(bcd::bench::run_vertex_experiment(cfg), format),
                 out_path);
        } else if (*all) {
            const auto g = load(graph_path, weighted);
            const auto scores = bcd::betweenness_all(g, threads);
            std::string out;
            if (format == OutputFormat::Json) {
                nlohmann::ordered_json j;
                j["rows"] = nlohmann::ordered_json::array();
                for (bcd::VertexId v = 0; v < g.num_vertices(); ++v)
                    j["rows"].push_back({{"vertex", g.label_of(v)}, {"score", scores[v]}});
                out = j.dump() + "\n";
            } else {
                out = "vertex\tscore\n";
                for (bcd::VertexId v = 0; v < g.num_vertices(); ++v)
                    out += std::to_string(g.label_of(v)) + "\t" + fmt(scores[v]) + "\n";
            }
            emit(out, out_path);
        } else if (*gadget) {
            const auto kind = bcd::bench::gadget_kind_from(kind_name);
            if (!time_sizes.empty()) {
                const auto report = bcd::bench::timing_scaling_report(kind, time_sizes, repeats);
                std::string out = "n\tseconds\n";
                for (const auto& row : report.rows)
                    out += std::to_string(row.n) + "\t" + fmt(row.seconds) + "\n";
                if (report.slope) out += "# slope=" + fmt(*report.slope) + "\n";
                emit(out, out_path);
            } else {
                if (gadget_n == 0)
                    throw std::invalid_argument("gadget needs --n (emit a graph) or --time (measure)");
                emit(bcd::write_edge_list(bcd::bench::generate_gadget(kind, gadget_n)), out_path);
            }
        } else if (*plan) {
            const auto p = bcd::required_samples(plan_epsilon, plan_delta, plan_k, plan_rv);
            if (format == OutputFormat::Json)
                emit(bcd::to_json(p) + "\n", out_path);
            else
                emit(bcd::plan_tsv_header() + "\n" + bcd::to_tsv_row(p) + "\n", out_path);
        }
        return 0;
    } catch (const bcd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
