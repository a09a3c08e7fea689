#pragma once

#include <stdexcept>
#include <string>

namespace minmax {

// Malformed input text (graph or instance files). Carries the 1-based line
// number when one is known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Semantically invalid data: bad instance fields, unreachable clients,
// placements off the eligible set, bad solver arguments.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A resource guard tripped: oracle size limits or the k-candidate budget.
// Callers get this instead of a wrong or partial answer.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace minmax
