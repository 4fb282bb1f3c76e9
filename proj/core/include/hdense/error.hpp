#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdense {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input that parsed cleanly but contained no hyperedges.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Out-of-range algorithm parameter (delta < 1, k < 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A function evaluated outside its domain (empty vertex set, zero volume).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Instance too large for exhaustive enumeration.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// An internal invariant did not hold. Always indicates a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace hdense
