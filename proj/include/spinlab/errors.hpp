#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

/// Misuse of an algebraic operation: division by zero, mixed radicands,
/// rank mismatch, malformed cycle.
class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input triangulation rejected. `where` carries a location such as
/// "simplex 3, facet 1".
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::string where = {})
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A spin computation was requested on a non-orientable complex.
class NonOrientableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace spinlab
