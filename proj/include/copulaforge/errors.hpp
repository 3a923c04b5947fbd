#pragma once

#include <stdexcept>
#include <string>

namespace copulaforge {

enum class ErrorKind {
    ConstraintViolation,
    DimensionUnsupported,
    ArityMismatch,
    DomainError,
    NoBracket,
    MaxIterExceeded,
    NotPositiveDefinite,
    FrailtyUnavailable,
    SamplerFailure,
    WeightSumViolation,
    NotImplemented,
    IterationCap,
    InsufficientData,
    DegenerateDenominator,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Parameter/dimension problems map to CLI exit code 2, runtime failures to 3.
    bool is_validation() const {
        switch (kind_) {
        case ErrorKind::ConstraintViolation:
        case ErrorKind::DimensionUnsupported:
        case ErrorKind::ArityMismatch:
        case ErrorKind::WeightSumViolation:
        case ErrorKind::NotPositiveDefinite:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

} // namespace copulaforge
