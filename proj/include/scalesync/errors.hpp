#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scalesync {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected input: bad gains, malformed graph, invalid root, mismatched
/// dimensions, unstable matrix where a stable one is required, and so on.
/// The CLI maps these to exit status 1.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

class ArgumentError : public DomainError {
public:
    using DomainError::DomainError;
};

class GraphValidationError : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidRootError : public DomainError {
public:
    using DomainError::DomainError;
};

class BoundViolationError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnstableMatrixError : public DomainError {
public:
    using DomainError::DomainError;
};

class CertificateError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numerical routine failed in a way valid inputs should never trigger.
class InternalError : public Error {
public:
    using Error::Error;
};

/// File system / serialization failure. CLI exit status 3.
class IoError : public Error {
public:
    using Error::Error;
};

/// Simulation state left the finite range. CLI exit status 4.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::size_t step, std::size_t agent)
        : Error(what), step(step), agent(agent) {}

    std::size_t step;
    std::size_t agent;  // 0-based; reported 1-based in messages
};

}  // namespace scalesync
