#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwire {

enum class ErrorCode {
    NonHermitianInput,
    NotUnitary,
    NotNormalized,
    DimensionMismatch,
    DimensionTooSmall,
    NotProportional,
    ZeroTheta,
    BadCouplingCount,
    IndexOutOfRange,
    RegisterTooLarge,
    Overflow,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every precondition failure in the library surfaces as this exception;
// callers that care about the kind inspect code().
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::ZeroTheta: return "ZeroTheta";
    case ErrorCode::BadCouplingCount: return "BadCouplingCount";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RegisterTooLarge: return "RegisterTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace qwire
