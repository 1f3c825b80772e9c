#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhardy {

enum class ErrorCode {
    InvalidArgument,
    ZeroAtOrigin,
    ZeroDenominator,
    FrameNotOrthogonal,
    InsufficientNodes,
    NotInBall,
    InconsistentSphere,
    SingularGram,
    NoZero,
    NotSlicePreserving,
    BoundaryZeroLog,
    ZeroValue,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::FrameNotOrthogonal: return "FrameNotOrthogonal";
        case ErrorCode::InsufficientNodes: return "InsufficientNodes";
        case ErrorCode::NotInBall: return "NotInBall";
        case ErrorCode::InconsistentSphere: return "InconsistentSphere";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::NoZero: return "NoZero";
        case ErrorCode::NotSlicePreserving: return "NotSlicePreserving";
        case ErrorCode::BoundaryZeroLog: return "BoundaryZeroLog";
        case ErrorCode::ZeroValue: return "ZeroValue";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// CLI prints name() verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace qhardy
