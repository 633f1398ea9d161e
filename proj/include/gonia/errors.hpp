#pragma once

#include <stdexcept>
#include <string>

namespace gonia {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid input or a violated domain invariant. The message names the
// violated constraint. Maps to CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

// Numeric degeneracy beyond tolerance (clamp budget exceeded, negative
// radicand under a root, non-convergence). Maps to CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

// Syntax error in textual input; carries the 1-based column.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t column)
        : DomainError(what + " (column " + std::to_string(column) + ")"),
          column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

}  // namespace gonia
