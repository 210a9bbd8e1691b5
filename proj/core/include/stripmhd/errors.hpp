#pragma once

#include <stdexcept>
#include <string>

namespace stripmhd {

/// Bad configuration (unknown keys, invalid grid, q-range too small, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on data was violated (nonzero mean, negative weight, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A query outside the recorded horizon or a mismatched pair of records.
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// Caller misuse (grid mismatch between operands, flavor mismatch, ...).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stripmhd
