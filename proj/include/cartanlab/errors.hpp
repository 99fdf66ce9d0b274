#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartanlab {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing values from different coefficient domains or fields.
class DomainMismatchError : public Error {
public:
    using Error::Error;
};

/// Division by zero in any domain.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Laurent-polynomial division by an element that is not a unit of the ring.
class NonInvertibleError : public Error {
public:
    using Error::Error;
};

/// Matrix dimension mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Determinant is not 1 where SL_n is required.
class DeterminantError : public Error {
public:
    using Error::Error;
};

/// Generator index out of range in a group word.
class WordIndexError : public Error {
public:
    using Error::Error;
};

/// An iterative solver exceeded its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Exact entries grew past the configured bit-size cap.
class SizeBudgetError : public Error {
public:
    using Error::Error;
};

/// Rejected text input; `position` is the byte offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

} // namespace cartanlab
