#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Violated mathematical precondition (wrong Hilbert function shape, zero
// input, degenerate form where a nondegenerate one is required, ...).
// The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected polynomial/number text. Carries the byte offset of the first
// offending character. The CLI maps this to exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Internal consistency failure: a condition the algorithms guarantee was
// observed to be false. Always a bug, never a user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace apolar
