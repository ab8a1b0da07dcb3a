#pragma once

#include <stdexcept>
#include <string>

namespace deepf {

// Bad run configuration, schema violations, impossible layer specs.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (bad rows, out-of-range labels).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: operations called in an invalid order (backward before forward).
struct StateError : std::runtime_error {
    explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown mid-run: non-finite loss or gradient.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, not user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace deepf
