#include "bench/gadgets.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcd::bench {

DirectedGraph generate_gadget(GadgetKind kind, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("gadget size must be at least 2");
    using Label = DirectedGraph::Label;
    std::vector<std::pair<Label, Label>> edges;
    if (kind == GadgetKind::Fan) {
        edges.reserve(n + 1);
        for (std::uint64_t i = 1; i <= n; ++i)
            edges.emplace_back(static_cast<Label>(i), 0); // source -> root
        edges.emplace_back(0, static_cast<Label>(n + 1)); // root -> sink
    } else {
        if (n % 2 != 0) throw std::invalid_argument("broom size must be even");
        const std::uint64_t half = n / 2;
        edges.reserve(n + 1);
        for (std::uint64_t i = 1; i < half; ++i)
            edges.emplace_back(static_cast<Label>(i), static_cast<Label>(i + 1));
        edges.emplace_back(static_cast<Label>(half), 0); // path end -> root
        for (std::uint64_t j = half + 1; j <= n + 1; ++j)
            edges.emplace_back(0, static_cast<Label>(j)); // root -> sinks
    }
    return DirectedGraph::from_edges(edges);
}

GadgetKind gadget_kind_from(std::string_view name) {
    if (name == "fan") return GadgetKind::Fan;
    if (name == "broom") return GadgetKind::Broom;
    throw std::invalid_argument("unknown gadget kind '" + std::string(name) + "'");
}

const char* gadget_kind_name(GadgetKind kind) {
    return kind == GadgetKind::Fan ? "fan" : "broom";
}

} // namespace bcd::bench
