#pragma once

#include <stdexcept>
#include <string>

namespace permsym {

/// Input text could not be parsed. `line()` is 1-based, 0 when unknown.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A request whose cost is beyond the supported ceilings (e.g. an
/// exhaustive sweep at a degree where subset enumeration is impossible).
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency failure: two routes that must agree did not, or a
/// bounded iteration exceeded its bound. Indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace permsym
