#pragma once

#include <stdexcept>
#include <string>

namespace wce {

// Failure categories surfaced to callers and mapped to CLI exit codes.
enum class ErrorKind {
    EmptyInput,
    NonPositiveEigenvalue,
    DuplicateEigenvalue,
    DimensionTooLarge,
    NotSymmetric,
    DimensionMismatch,
    LengthMismatch,
    NotUnitNorm,
    ZeroEntryActuator,
    SingularGramian,
    SpectralRatioTooLarge,
    UnsupportedDimension,
    InvalidInput,
    InternalInvariantViolation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace wce
