#pragma once

#include <stdexcept>
#include <string>

namespace ertbp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user-facing input (mass ratio out of range, bad truncation order, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Two series with incompatible truncation settings were combined.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// API contract broken by the caller (parity mismatch on add, incomplete lower orders, ...).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// A linear solve hit a (near-)vanishing determinant at a non-singular key.
class NearResonanceError : public Error {
public:
    explicit NearResonanceError(const std::string& msg) : Error(msg) {}
};

/// Division by eta of a polynomial with a nonzero constant term; signals a
/// construction bug, not bad input.
class RingError : public Error {
public:
    explicit RingError(const std::string& msg) : Error(msg) {}
};

/// Evaluation requested with eta != 0 while Delta(eta) is not a root.
class ConstraintError : public Error {
public:
    explicit ConstraintError(const std::string& msg) : Error(msg) {}
};

/// Requested orbit parameters do not map to any class of the decision table.
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& msg) : Error(msg) {}
};

/// Trajectory approached one of the primaries closer than the collision guard.
class SingularityError : public Error {
public:
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

/// Adaptive step size underflowed.
class StiffnessError : public Error {
public:
    explicit StiffnessError(const std::string& msg) : Error(msg) {}
};

}  // namespace ertbp
