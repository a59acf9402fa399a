#include "bcd/reachability.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace bcd {

bool ReachSet::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

ReachSet compute_rv(const DirectedGraph& g, VertexId r) {
    if (r >= g.num_vertices()) throw std::invalid_argument("target vertex out of range");
    const auto t0 = std::chrono::steady_clock::now();

    ReachSet rs;
    rs.target = r;
    std::vector<std::uint8_t> visited(g.num_vertices(), 0);
    visited[r] = 1;

    std::vector<VertexId> queue;
    queue.push_back(r);
    std::size_t head = 0;
    while (head < queue.size()) {
        const VertexId v = queue[head++];
        for (VertexId u : g.in_neighbors(v)) {
            if (!visited[u]) {
                visited[u] = 1;
                queue.push_back(u);
                rs.members.push_back(u);
            }
        }
    }
    std::sort(rs.members.begin(), rs.members.end());

    rs.rv_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rs;
}

double rv_ratio(const ReachSet& rs, const DirectedGraph& g) {
    return static_cast<double>(rs.members.size()) / static_cast<double>(g.num_vertices());
}

} // namespace bcd
