#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfrob {

enum class Errc {
    NonPrime,
    DegreeOutOfRange,
    FieldTooLarge,
    FieldMismatch,
    BudgetExceeded,
    PrecisionUnderflow,
    OriginNotOnCurve,
    NotSmoothAlongAxis,
    BranchOnCurve,
    PrecisionCapExceeded,
    CommonComponent,
    NotStabilized,
    AxisContainment,
    FieldSearchExhausted,
    InternalMismatch,
    InsufficientPairs,
    SyntaxError,
    UnknownVariable,
    ExponentTooLarge,
    VariableArityMismatch,
    Overflow,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc e) {
    switch (e) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PrecisionUnderflow: return "PrecisionUnderflow";
    case Errc::OriginNotOnCurve: return "OriginNotOnCurve";
    case Errc::NotSmoothAlongAxis: return "NotSmoothAlongAxis";
    case Errc::BranchOnCurve: return "BranchOnCurve";
    case Errc::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case Errc::CommonComponent: return "CommonComponent";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::AxisContainment: return "AxisContainment";
    case Errc::FieldSearchExhausted: return "FieldSearchExhausted";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::InsufficientPairs: return "InsufficientPairs";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ExponentTooLarge: return "ExponentTooLarge";
    case Errc::VariableArityMismatch: return "VariableArityMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace pfrob
