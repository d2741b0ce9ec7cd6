#pragma once

#include <stdexcept>
#include <string>

namespace galine {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed scenario/config input (unknown keys, bad values).
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Degree-budget mismatch or overflow.
struct DegreeError : Error {
    explicit DegreeError(const std::string& what) : Error(what) {}
};

/// Unsolvable linear system (e.g. all-zero velocity functional).
struct SolveError : Error {
    explicit SolveError(const std::string& what) : Error(what) {}
};

/// Numeric run aborted (support escape, norm drift, step rejection).
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace galine
