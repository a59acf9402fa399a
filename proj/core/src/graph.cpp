#include "bcd/graph.hpp"

#include "bcd/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

namespace bcd {

namespace {

struct RawEdge {
    DirectedGraph::Label u, v;
    double w;
};

bool parse_int(std::string_view tok, DirectedGraph::Label& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_double(std::string_view tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

[[noreturn]] void line_error(std::size_t lineno, const std::string& what) {
    throw InputError("edge list line " + std::to_string(lineno) + ": " + what);
}

std::vector<RawEdge> parse_edge_lines(const std::string& text, bool weighted, char comment) {
    std::vector<RawEdge> edges;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    const std::size_t len = text.size();
    while (pos < len) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = len;
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        // split on spaces/tabs
        std::string_view toks[4];
        int ntok = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (ntok < 4) toks[ntok] = line.substr(i, j - i);
            ++ntok;
            i = j;
        }
        if (ntok == 0) continue;                       // blank line
        if (toks[0].front() == comment) continue;      // comment line

        const int expected = weighted ? 3 : 2;
        if (ntok != expected)
            line_error(lineno, "expected " + std::to_string(expected) + " fields, got " +
                                   std::to_string(ntok));

        RawEdge e{0, 0, 1.0};
        if (!parse_int(toks[0], e.u)) line_error(lineno, "bad vertex id '" + std::string(toks[0]) + "'");
        if (!parse_int(toks[1], e.v)) line_error(lineno, "bad vertex id '" + std::string(toks[1]) + "'");
        if (weighted) {
            if (!parse_double(toks[2], e.w)) line_error(lineno, "bad weight '" + std::string(toks[2]) + "'");
            if (!(e.w > 0.0)) line_error(lineno, "weight must be > 0");
        }
        edges.push_back(e);
    }
    return edges;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

} // namespace

class GraphBuilder {
public:
    // Shared back end: drops self-loops, applies the dense remap in order of
    // first appearance, collapses duplicate (u,v) keeping the first weight,
    // and materializes both adjacency directions.
    static DirectedGraph build(std::vector<RawEdge> edges, bool weighted) {
        DirectedGraph g;
        g.weighted_ = weighted;

        struct DenseEdge {
            VertexId u, v;
            double w;
        };
        std::vector<DenseEdge> dense;
        dense.reserve(edges.size());
        for (const RawEdge& e : edges) {
            if (e.u == e.v) continue; // self-loop
            dense.push_back({intern(g, e.u), intern(g, e.v), e.w});
        }
        if (g.n_ == 0) throw InputError("empty graph: no edges between distinct vertices");

        std::stable_sort(dense.begin(), dense.end(), [](const DenseEdge& a, const DenseEdge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        // stable sort keeps file order within equal (u,v), so unique keeps
        // the first weight seen
        dense.erase(std::unique(dense.begin(), dense.end(),
                                [](const DenseEdge& a, const DenseEdge& b) {
                                    return a.u == b.u && a.v == b.v;
                                }),
                    dense.end());
        g.m_ = dense.size();

        const VertexId n = g.n_;
        g.fwd_off_.assign(n + 1, 0);
        g.rev_off_.assign(n + 1, 0);
        for (const DenseEdge& e : dense) {
            ++g.fwd_off_[e.u + 1];
            ++g.rev_off_[e.v + 1];
        }
        for (VertexId v = 0; v < n; ++v) {
            g.fwd_off_[v + 1] += g.fwd_off_[v];
            g.rev_off_[v + 1] += g.rev_off_[v];
        }
        g.fwd_.resize(g.m_);
        if (weighted) g.fwd_w_.resize(g.m_);
        g.rev_.resize(g.m_);

        std::vector<EdgeIndex> rev_fill(g.rev_off_.begin(), g.rev_off_.end() - 1);
        EdgeIndex k = 0;
        for (const DenseEdge& e : dense) {
            g.fwd_[k] = e.v;
            if (weighted) g.fwd_w_[k] = e.w;
            ++k;
            g.rev_[rev_fill[e.v]++] = e.u; // (u,v)-sorted input keeps rev lists sorted
        }
        return g;
    }

    static DirectedGraph from_parts(std::vector<EdgeIndex> fwd_off, std::vector<VertexId> fwd,
                                    std::vector<EdgeIndex> rev_off, std::vector<VertexId> rev,
                                    std::vector<DirectedGraph::Label> labels,
                                    std::unordered_map<DirectedGraph::Label, VertexId> index) {
        DirectedGraph g;
        g.n_ = static_cast<VertexId>(labels.size());
        g.m_ = fwd.size();
        g.weighted_ = false;
        g.fwd_off_ = std::move(fwd_off);
        g.fwd_ = std::move(fwd);
        g.rev_off_ = std::move(rev_off);
        g.rev_ = std::move(rev);
        g.labels_ = std::move(labels);
        g.index_ = std::move(index);
        return g;
    }

private:
    static VertexId intern(DirectedGraph& g, DirectedGraph::Label label) {
        auto [it, inserted] = g.index_.try_emplace(label, g.n_);
        if (inserted) {
            g.labels_.push_back(label);
            ++g.n_;
        }
        return it->second;
    }
};

DirectedGraph load_edge_list(const EdgeListSource& src) {
    const std::string& text = src.from_text ? src.text : read_file(src.path);
    return GraphBuilder::build(parse_edge_lines(text, src.weighted, src.comment), src.weighted);
}

DirectedGraph DirectedGraph::from_edges(const std::vector<std::pair<Label, Label>>& edges) {
    std::vector<RawEdge> raw;
    raw.reserve(edges.size());
    for (auto [u, v] : edges) raw.push_back({u, v, 1.0});
    return GraphBuilder::build(std::move(raw), false);
}

DirectedGraph DirectedGraph::from_weighted_edges(
    const std::vector<std::tuple<Label, Label, double>>& edges) {
    std::vector<RawEdge> raw;
    raw.reserve(edges.size());
    for (auto [u, v, w] : edges) {
        if (!(w > 0.0)) throw std::invalid_argument("edge weight must be > 0");
        raw.push_back({u, v, w});
    }
    return GraphBuilder::build(std::move(raw), true);
}

DirectedGraph reverse_view(const DirectedGraph& g) {
    return GraphBuilder::from_parts(g.rev_off_, g.rev_, g.fwd_off_, g.fwd_, g.labels_, g.index_);
}

std::string write_edge_list(const DirectedGraph& g) {
    std::string out;
    char buf[64];
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const auto nbrs = g.out_neighbors(u);
        const auto wts = g.out_weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            out += std::to_string(g.label_of(u));
            out += ' ';
            out += std::to_string(g.label_of(nbrs[i]));
            if (g.is_weighted()) {
                std::snprintf(buf, sizeof buf, " %.17g", wts[i]);
                out += buf;
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace bcd
