#pragma once

#include <stdexcept>
#include <string>

namespace tubings {

// Violated call contract: mismatched truncation orders, bad sector index, ...
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input alphabet is malformed (empty, zero entry, signed where not allowed).
struct InvalidSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration request above the configured cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Repeated alphabet values: the factorial-divergence framework breaks down
// and the non-perturbative scales change shape. The message names the
// expected scales for the smallest repeated value.
struct DegenerateSpectrumError : std::runtime_error {
    explicit DegenerateSpectrumError(long repeated_value)
        : std::runtime_error(
              "degenerate spectrum: a_i = " + std::to_string(repeated_value) +
              " is repeated; sector growth parameters are undefined and the "
              "non-perturbative scales are exp(-1/(" +
              std::to_string(2 * repeated_value) +
              "x)) together with the two phases exp(+1/sqrt(x)), exp(-1/sqrt(x))"),
          repeated_value(repeated_value) {}
    long repeated_value;
};

// A solver result is too short to feed the requested asymptotic expansion.
struct InsufficientOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Floating-point precision exhausted (detected via residual blow-up).
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cache file unreadable/unwritable.
struct CacheIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tubings
