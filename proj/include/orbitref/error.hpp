#pragma once

#include <stdexcept>
#include <string>

namespace orbitref {

enum class ErrorCode {
    MixedFields,
    DivisionByZero,
    WrongField,
    ShapeMismatch,
    Singular,
    NumericKindUnsupported,
    NotSplit,
    Nilpotent,
    FiniteFieldUnsupported,
    CriterionHolds,
    NotJordanCoordinates,
    NotPrime,
    BudgetExceeded,
    Parse,
    InvalidArgument,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. `detail` carries machine-readable context
/// (e.g. the residual factor for NotSplit).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string detail = {})
        : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace orbitref
