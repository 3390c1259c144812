#include "bfamily/error.hpp"

namespace bfamily {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OddResolution: return "OddResolution";
        case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::SymmetryViolation: return "SymmetryViolation";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NoiseFloor: return "NoiseFloor";
        case ErrorCode::EmptyWindow: return "EmptyWindow";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace bfamily
