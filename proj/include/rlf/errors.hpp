#pragma once

#include <stdexcept>
#include <string>

namespace rlf {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A map that was required to be a real structure is not one.
struct NotInvolution : Error {
    explicit NotInvolution(const std::string& what = "map is not a real structure")
        : Error(what) {}
};

// A curve failed the setwise-invariance requirement c(a) = a.
struct InvariantViolation : Error {
    int index; // 1-based position in a chain, 0 when not chain-related
    explicit InvariantViolation(const std::string& what, int idx = 0)
        : Error(what), index(idx) {}
};

// Twin move requested at an index whose code does not act as a reflection.
struct IllegalMove : Error {
    explicit IllegalMove(const std::string& what) : Error(what) {}
};

// Search node budget exhausted.
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace rlf
