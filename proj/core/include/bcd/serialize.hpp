#pragma once

#include "bcd/estimators.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bcd {

// One result row as it appears in output files: the estimate, the vertex's
// original label from the input edge list (results speak the caller's ids,
// not the dense internal ones), and the error percentage when an exact
// reference score was available.  An error of NaN means the reference score
// was 0 with a nonzero estimate — the ratio is undefined, which is distinct
// from "no reference computed" (absent).  NaN serializes as null in json
// and as nan in tsv.
struct EstimateRecord {
    std::int64_t label = 0;
    BcEstimate est;
    std::optional<double> error_pct;
};

// Compact one-line JSON object with keys
//   target, score, mode, rv_size, samples, rv_seconds, compute_seconds, seed
// in that order; seed is null for exact results, and an "error" key is
// appended only when the record carries one.
std::string to_json(const EstimateRecord& rec);
std::string to_json(const SamplingPlan& plan);

// Tab-separated row in table column order
//   vertex score rv_size mode error time_seconds rv_seconds samples seed
// where mode is E or A and absent error/seed render as "-".  Doubles are
// printed with 17 significant digits so parsing recovers them exactly.
std::string tsv_header();
std::string to_tsv_row(const EstimateRecord& rec);

std::string plan_tsv_header();
std::string to_tsv_row(const SamplingPlan& plan);

// Inverses of the emitters above; malformed text raises InputError.
EstimateRecord record_from_json(const std::string& text);
EstimateRecord record_from_tsv_row(const std::string& line);
SamplingPlan plan_from_json(const std::string& text);

const char* mode_name(EstimateMode mode);   // "exact" / "approximate"
const char* mode_letter(EstimateMode mode); // "E" / "A", as in the result tables

} // namespace bcd
