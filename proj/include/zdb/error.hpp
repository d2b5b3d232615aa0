#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdb {

enum class ErrorCode {
    NotPrimePower,
    NotPrime,
    DivisionByZero,
    NotInvertible,
    TooLarge,
    DuplicateFieldOrder,
    RepeatedPrime,
    CyclicGroupHasNoSupport,
    EmptySupport,
    InvalidElement,
    BadExponent,
    EvenPrimeNotAllowed,
    NotABijection,
    InvalidTable,
    CompositionMismatch,
    DegenerateDss,
    OverlappingSets,
    NonCyclicGroup,
    FormatError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Precondition failures raised by every module. FormatError marks malformed
// artifact input; everything else is a caller-side contract violation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace zdb
