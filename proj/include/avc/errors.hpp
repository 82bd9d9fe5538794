#pragma once

#include <stdexcept>
#include <string>

namespace avc {

// Base class for all domain errors raised by the library. `code` is a stable
// machine-readable identifier used in CLI error documents.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed or inconsistent input (dimension mismatch, bad ranges, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("input", what) {}
};

// Operation not defined for the given constraint body (e.g. exact pattern
// feasibility for a non-polyhedral body).
class UnsupportedBodyError : public Error {
public:
    explicit UnsupportedBodyError(const std::string& what) : Error("unsupported_body", what) {}
};

// Support point requested for a direction with infinite dual seminorm.
class NoSupportError : public Error {
public:
    explicit NoSupportError(const std::string& what) : Error("no_support", what) {}
};

// Hypothesis with a = 0 where a nontrivial normal is required.
class DegenerateHypothesisError : public Error {
public:
    explicit DegenerateHypothesisError(const std::string& what) : Error("degenerate_hypothesis", what) {}
};

// A tabular operation touched a point outside the tabulated window.
class CoverageError : public Error {
public:
    explicit CoverageError(const std::string& what) : Error("coverage", what) {}
};

// Exhaustive enumeration refused because the instance exceeds the cap.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error("capacity", what) {}
};

// A stated precondition does not hold (e.g. sample too small for the
// unachievable-pattern construction).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

// Invariant violation inside the library itself.  Raised only on bugs.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal", what) {}
};

}  // namespace avc
