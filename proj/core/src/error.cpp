#include "jcm/error.hpp"

namespace jcm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::TailTooHeavy: return "TailTooHeavy";
        case ErrorCode::NonPositiveTolerance: return "NonPositiveTolerance";
        case ErrorCode::CutoffMismatch: return "CutoffMismatch";
        case ErrorCode::QuadraticRequiresK4: return "QuadraticRequiresK4";
        case ErrorCode::DegenerateWindow: return "DegenerateWindow";
        case ErrorCode::EvenR: return "EvenR";
        case ErrorCode::NegligibleBranch: return "NegligibleBranch";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace jcm
