#include "bench/scaling.hpp"

#include "bcd/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bcd::bench {

ScalingReport timing_scaling_report(GadgetKind kind, const std::vector<std::uint64_t>& sizes,
                                    unsigned repeats) {
    if (sizes.empty()) throw std::invalid_argument("at least one size required");
    if (std::adjacent_find(sizes.begin(), sizes.end(),
                           [](std::uint64_t a, std::uint64_t b) { return a >= b; }) != sizes.end())
        throw std::invalid_argument("sizes must be strictly ascending");
    if (repeats == 0) throw std::invalid_argument("repeats must be at least 1");

    ScalingReport report;
    report.kind = kind;
    report.rows.reserve(sizes.size());
    for (const std::uint64_t n : sizes) {
        const DirectedGraph g = generate_gadget(kind, n);
        const VertexId root = *g.vertex_for(0);
        double best = std::numeric_limits<double>::infinity();
        for (unsigned rep = 0; rep < repeats; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const BcEstimate est = ebcd(g, root, /*threads=*/1);
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            (void)est;
            best = std::min(best, elapsed);
        }
        report.rows.push_back({n, best});
    }

    if (report.rows.size() >= 2) {
        // Least squares on (log n, log t); timings are floored at 1ns so a
        // measurement below clock resolution cannot produce log(0).
        double sx = 0, sy = 0;
        for (const auto& row : report.rows) {
            sx += std::log(static_cast<double>(row.n));
            sy += std::log(std::max(row.seconds, 1e-9));
        }
        const double mx = sx / static_cast<double>(report.rows.size());
        const double my = sy / static_cast<double>(report.rows.size());
        double num = 0, den = 0;
        for (const auto& row : report.rows) {
            const double dx = std::log(static_cast<double>(row.n)) - mx;
            const double dy = std::log(std::max(row.seconds, 1e-9)) - my;
            num += dx * dy;
            den += dx * dx;
        }
        report.slope = num / den; // den > 0: sizes are strictly ascending
    }
    return report;
}

} // namespace bcd::bench
