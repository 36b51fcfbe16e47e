#pragma once

#include <stdexcept>
#include <string>

namespace rpebble {

enum class errc {
    invalid_argument = 1,  // bad input: out-of-range vertex, self-loop, non-tree, disconnected, ...
    parse_error = 2,       // malformed graph6 / edge-list / certificate text
    unsupported = 3,       // request outside the supported envelope (e.g. graph too large)
    budget_exceeded = 4,   // search budget exhausted; distinct from a negative answer
    limit_exceeded = 5,    // hard resource limit (explicit group too large, count overflow)
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace rpebble
