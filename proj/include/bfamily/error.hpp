#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bfamily {

enum class ErrorCode {
    OddResolution,
    ResolutionTooSmall,
    NonFinite,
    SymmetryViolation,
    Overflow,
    NoiseFloor,
    EmptyWindow,
    InsufficientData,
    InvalidConfig,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable error code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bfamily
