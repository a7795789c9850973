#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hbtrace {

/// Input outside an operation's mathematical domain (wrong height, zero ideal, non-CM, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector length does not match the ambient ring, or two rings differ.
class ArityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Enumeration caps (generator count, lattice points) exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace hbtrace
