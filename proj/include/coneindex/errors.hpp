#pragma once

#include <stdexcept>
#include <string>

namespace coneindex {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag surfaced by the CLI's --json error output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Precondition violation on an operation argument.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message)
        : Error("invalid-argument", message) {}
};

// Interval contains an entire progression tail, so the count diverges.
class InfiniteCountError : public Error {
public:
    explicit InfiniteCountError(const std::string& message)
        : Error("infinite-count", message) {}
};

// A progression walk would exceed the configured enumeration cap.
class EnumerationLimitError : public Error {
public:
    explicit EnumerationLimitError(const std::string& message)
        : Error("enumeration-limit", message) {}
};

// A spectrum (or spectrum combination) cannot be expressed in the
// progression-plus-exceptional representation.
class RepresentationError : public Error {
public:
    explicit RepresentationError(const std::string& message)
        : Error("representation", message) {}
};

// A stated invariant failed (non-integer multiplicity, double-represented
// eigenvalue, Calderon monotonicity, ...).
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& message)
        : Error("invariant-violation", message) {}
};

// Calderon dimension exceeds the spectral counting bound N[beta,gamma).
class BoundViolation : public Error {
public:
    explicit BoundViolation(const std::string& message)
        : Error("bound-violation", message) {}
};

// Table-backed Calderon model has no entry for the queried interval.
class MissingTableEntry : public Error {
public:
    explicit MissingTableEntry(const std::string& message)
        : Error("missing-table-entry", message) {}
};

// Assembled index total is not an integer, or supplied dimensions are
// inconsistent with the index identities.
class InconsistentInput : public Error {
public:
    explicit InconsistentInput(const std::string& message)
        : Error("inconsistent-input", message) {}
};

// Numeric evaluation could not meet the requested tolerance.
class ToleranceError : public Error {
public:
    explicit ToleranceError(const std::string& message)
        : Error("tolerance", message) {}
};

// Malformed input file / CLI literal.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error("parse", message) {}
};

}  // namespace coneindex
