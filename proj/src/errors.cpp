#include "wce/errors.hpp"

namespace wce {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NonPositiveEigenvalue: return "NonPositiveEigenvalue";
        case ErrorKind::DuplicateEigenvalue: return "DuplicateEigenvalue";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotUnitNorm: return "NotUnitNorm";
        case ErrorKind::ZeroEntryActuator: return "ZeroEntryActuator";
        case ErrorKind::SingularGramian: return "SingularGramian";
        case ErrorKind::SpectralRatioTooLarge: return "SpectralRatioTooLarge";
        case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

}  // namespace wce
