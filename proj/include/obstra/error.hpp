#pragma once

#include <stdexcept>
#include <string>

namespace obstra {

// Error kinds map one-to-one onto C API status codes and CLI exit codes.
enum class ErrorKind {
    parse = 2,       // malformed input text
    invariant = 3,   // violated type invariant or degenerate geometry
    budget = 4,      // solver node budget exhausted without proof of optimality
    unsupported = 5, // input outside the supported fragment
    internal = 6,    // construction failed to certify after exhausting retries
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

} // namespace obstra
