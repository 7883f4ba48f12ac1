#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jcm {

enum class ErrorCode {
    InvalidArgument,
    TailTooHeavy,
    NonPositiveTolerance,
    CutoffMismatch,
    QuadraticRequiresK4,
    DegenerateWindow,
    EvenR,
    NegligibleBranch,
    EmptyGrid,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace jcm
