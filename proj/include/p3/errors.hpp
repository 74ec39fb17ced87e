#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace p3 {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonIntegralChernClass : public DomainError {
public:
    using DomainError::DomainError;
};

class NonIntegralChi : public DomainError {
public:
    using DomainError::DomainError;
};

class RankUnsupported : public DomainError {
public:
    using DomainError::DomainError;
};

class ParityViolation : public DomainError {
public:
    using DomainError::DomainError;
};

class OutOfValidityRange : public DomainError {
public:
    using DomainError::DomainError;
};

class MissingRows : public DomainError {
public:
    using DomainError::DomainError;
};

class MissingHypothesis : public DomainError {
public:
    using DomainError::DomainError;
};

/// No natural-cohomology assignment exists for the requested Chern type.
/// `twist()` names the offending twist when the failure is local to one row.
class NotNaturalizable : public Error {
public:
    explicit NotNaturalizable(const std::string& what,
                              std::optional<std::int64_t> twist = std::nullopt)
        : Error(what), twist_(twist) {}

    std::optional<std::int64_t> twist() const noexcept { return twist_; }

private:
    std::optional<std::int64_t> twist_;
};

/// Two independent computations of the same quantity disagreed.
class InconsistentDerivation : public Error {
public:
    using Error::Error;
};

} // namespace p3
