#pragma once

#include <stdexcept>
#include <string>

namespace orlapprox {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: window mismatch, unknown tag, unreadable config.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A numeric argument lies outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A request needs frequencies beyond the stored window.
class WindowError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A theorem hypothesis or operation precondition does not hold for the input.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A measure whose I-functional vanishes; it certifies no constant.
class DegenerateMeasureError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative method failed to bracket or converge.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// The LP solver hit its iteration cap or lost numerical feasibility.
class SolverError : public NonConvergenceError {
public:
    using NonConvergenceError::NonConvergenceError;
};

}  // namespace orlapprox
