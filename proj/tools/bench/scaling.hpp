#pragma once

#include "bench/gadgets.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bcd::bench {

struct ScalingRow {
    std::uint64_t n = 0;    // gadget size parameter (graph has n + 2 vertices)
    double seconds = 0.0;   // best-of-`repeats` exact computation time
};

struct ScalingReport {
    GadgetKind kind = GadgetKind::Fan;
    std::vector<ScalingRow> rows;
    // Least-squares slope of log(seconds) vs log(n); absent with fewer than
    // two sizes.  Near 1 for fan, near 2 for broom.
    std::optional<double> slope;
};

// Times the exact single-vertex computation at the gadget root for each
// size.  Sizes must be strictly ascending.  Each size is run `repeats` times and the
// minimum kept: the minimum is the standard scheduling-noise filter for
// wall-clock scaling measurements.  Runs single-threaded so the fitted
// exponent reflects algorithmic work, not pool overhead.
ScalingReport timing_scaling_report(GadgetKind kind, const std::vector<std::uint64_t>& sizes,
                                    unsigned repeats = 3);

} // namespace bcd::bench
