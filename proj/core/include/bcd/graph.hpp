#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace bcd {

// Dense vertex index, 0..n-1 after remapping.
using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Where an edge list comes from: a file on disk or an in-memory string.
// One edge per line, whitespace-separated "u v" (or "u v w" when weighted);
// lines starting with the comment character are skipped; LF and CRLF both
// accepted.
struct EdgeListSource {
    std::string path;
    std::string text;
    bool from_text = false;
    bool weighted = false;
    char comment = '#';

    static EdgeListSource file(std::string p, bool weighted = false, char comment = '#') {
        EdgeListSource s;
        s.path = std::move(p);
        s.weighted = weighted;
        s.comment = comment;
        return s;
    }
    static EdgeListSource memory(std::string t, bool weighted = false, char comment = '#') {
        EdgeListSource s;
        s.text = std::move(t);
        s.from_text = true;
        s.weighted = weighted;
        s.comment = comment;
        return s;
    }
};

// Immutable simple digraph in compressed adjacency form.  Both the forward
// and the reverse (transposed) adjacency are materialized at construction:
// reverse traversals need one, shortest-path expansions need the other, and
// neither is worth rebuilding per query.  Neighbor lists are sorted.
//
// Vertex labels in input files may be sparse or arbitrary integers; they are
// remapped to dense ids in order of first appearance, and the bijection is
// kept so results can be reported in the original labels.
//
// Self-loops are removed and duplicate (u,v) pairs collapse to one edge
// (keeping the first weight seen), so num_vertices/num_edges always describe
// the resulting simple digraph.  Instances are immutable after construction
// and safe to share across threads.
class DirectedGraph {
public:
    using Label = std::int64_t;

    VertexId num_vertices() const { return n_; }
    EdgeIndex num_edges() const { return m_; }
    bool is_weighted() const { return weighted_; }

    std::span<const VertexId> out_neighbors(VertexId v) const {
        return {fwd_.data() + fwd_off_[v], fwd_.data() + fwd_off_[v + 1]};
    }
    std::span<const VertexId> in_neighbors(VertexId v) const {
        return {rev_.data() + rev_off_[v], rev_.data() + rev_off_[v + 1]};
    }
    // Weights aligned with out_neighbors(v); empty span when unweighted.
    std::span<const double> out_weights(VertexId v) const {
        if (!weighted_) return {};
        return {fwd_w_.data() + fwd_off_[v], fwd_w_.data() + fwd_off_[v + 1]};
    }

    VertexId out_degree(VertexId v) const {
        return static_cast<VertexId>(fwd_off_[v + 1] - fwd_off_[v]);
    }
    VertexId in_degree(VertexId v) const {
        return static_cast<VertexId>(rev_off_[v + 1] - rev_off_[v]);
    }

    Label label_of(VertexId v) const { return labels_[v]; }
    std::optional<VertexId> vertex_for(Label label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Programmatic construction; shares the load pipeline (self-loop drop,
    // dedup, dense remap).  Throws std::invalid_argument on w <= 0 or NaN.
    static DirectedGraph from_edges(const std::vector<std::pair<Label, Label>>& edges);
    static DirectedGraph from_weighted_edges(
        const std::vector<std::tuple<Label, Label, double>>& edges);

private:
    DirectedGraph() = default;

    VertexId n_ = 0;
    EdgeIndex m_ = 0;
    bool weighted_ = false;
    std::vector<EdgeIndex> fwd_off_, rev_off_; // size n+1
    std::vector<VertexId> fwd_, rev_;
    std::vector<double> fwd_w_;                // aligned with fwd_, empty if unweighted
    std::vector<Label> labels_;                // dense id -> original label
    std::unordered_map<Label, VertexId> index_; // original label -> dense id

    friend DirectedGraph load_edge_list(const EdgeListSource&);
    friend DirectedGraph reverse_view(const DirectedGraph&);
    friend class GraphBuilder;
};

// Parses, remaps and validates an edge list.  Throws InputError on a
// malformed line (message carries the line number), a non-positive weight,
// an unreadable file, or an edge list that leaves no vertices.
DirectedGraph load_edge_list(const EdgeListSource& src);

// Graph with every edge direction flipped.  Weights are dropped: reversal
// exists to answer reachability questions, which ignore them.  Applying it
// twice yields the original edge set (still unweighted).
DirectedGraph reverse_view(const DirectedGraph& g);

inline VertexId out_degree(const DirectedGraph& g, VertexId v) { return g.out_degree(v); }

// Edge-list text for the graph, original labels, one edge per line, in
// dense (u, v) order.  Reloading the result reproduces the dense graph and
// label mapping exactly.
std::string write_edge_list(const DirectedGraph& g);

} // namespace bcd
