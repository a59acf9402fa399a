#pragma once

#include "bcd/graph.hpp"

#include <cstdint>
#include <string_view>

namespace bcd::bench {

// Synthetic families contrasting the two cost factors of a single-vertex
// computation: how many sources reach the target versus how much graph each
// source's shortest-path pass touches.
//
//   fan(n):   n sources, each with one edge into the root, and one sink fed
//             by the root.  n + 2 vertices; n vertices reach the root but
//             every per-source pass is constant size, so the exact
//             computation scales linearly in n.
//   broom(n): a directed path of n/2 vertices into the root, which fans out
//             to n/2 + 1 sinks.  n + 2 vertices; only n/2 reach the root,
//             yet each per-source pass sweeps the whole broom, so the exact
//             computation scales quadratically.  (n even.)
//
// Reach-set size alone therefore does not determine runtime, which is the
// point of the pair.  The root carries label 0 in both; sources/path
// vertices are labeled 1..; sinks take the remaining labels.
enum class GadgetKind { Fan, Broom };

DirectedGraph generate_gadget(GadgetKind kind, std::uint64_t n);

// "fan" / "broom"; parse throws std::invalid_argument on anything else.
GadgetKind gadget_kind_from(std::string_view name);
const char* gadget_kind_name(GadgetKind kind);

} // namespace bcd::bench
