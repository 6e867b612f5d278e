#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rot4 {

enum class ErrorCode {
    NonFinite,
    NotUnit,
    DegenerateAxis,
    GibbsSingular,
    NotSimple,
    NoConvergence,
    PairingFailure,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NotUnit: return "NotUnit";
        case ErrorCode::DegenerateAxis: return "DegenerateAxis";
        case ErrorCode::GibbsSingular: return "GibbsSingular";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::PairingFailure: return "PairingFailure";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorCode values so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rot4
