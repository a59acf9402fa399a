#pragma once

#include <stdexcept>
#include <string>

namespace bcd {

// Thrown for problems with external input: unreadable or malformed edge-list
// files, unknown vertex labels. Bad API arguments (out-of-range parameters,
// inconsistent options) use std::invalid_argument instead, so callers can
// distinguish "fix your data" from "fix your call".
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bcd
