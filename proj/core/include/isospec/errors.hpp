#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace isospec {

/// Base class for all domain errors. Carries a stable machine-readable name
/// that the CLI emits in its JSON error objects.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct SumNonZeroError : DomainError {
    explicit SumNonZeroError(const std::string& msg) : DomainError("SumNonZero", msg) {}
};

struct ArchimedeanViolationError : DomainError {
    explicit ArchimedeanViolationError(const std::string& msg)
        : DomainError("ArchimedeanViolation", msg) {}
};

struct DegreeMismatchError : DomainError {
    explicit DegreeMismatchError(const std::string& msg) : DomainError("DegreeMismatch", msg) {}
};

struct ComplexPlaceError : DomainError {
    explicit ComplexPlaceError(const std::string& msg) : DomainError("ComplexPlace", msg) {}
};

struct NotCoprimeError : DomainError {
    explicit NotCoprimeError(const std::string& msg) : DomainError("NotCoprime", msg) {}
};

struct InternalProductFormulaViolationError : DomainError {
    explicit InternalProductFormulaViolationError(const std::string& msg)
        : DomainError("InternalProductFormulaViolation", msg) {}
};

struct Nu0RamifiedError : DomainError {
    explicit Nu0RamifiedError(const std::string& msg) : DomainError("Nu0Ramified", msg) {}
};

struct DegreeTooSmallError : DomainError {
    explicit DegreeTooSmallError(const std::string& msg) : DomainError("DegreeTooSmall", msg) {}
};

struct OrbitCollisionError : DomainError {
    explicit OrbitCollisionError(const std::string& msg) : DomainError("OrbitCollision", msg) {}
};

struct InsufficientVectorsError : DomainError {
    explicit InsufficientVectorsError(const std::string& msg)
        : DomainError("InsufficientVectors", msg) {}
};

struct TooLargeError : DomainError {
    explicit TooLargeError(const std::string& msg) : DomainError("TooLarge", msg) {}
};

struct NotSymmetricError : DomainError {
    explicit NotSymmetricError(const std::string& msg) : DomainError("NotSymmetric", msg) {}
};

/// Malformed input that violates an operation precondition (bad place label,
/// wrong vector length, unknown place, ...).
struct InvalidArgumentError : DomainError {
    explicit InvalidArgumentError(const std::string& msg) : DomainError("InvalidArgument", msg) {}
};

} // namespace isospec
