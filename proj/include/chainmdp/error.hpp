#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainmdp {

enum class ErrorCode {
    InvalidSpec,
    RejectedModulus,
    InvalidConvention,
    MixedRings,
    NotAUnit,
    DigitNotInT,
    NotSquare,
    ZeroMatrix,
    DimensionMismatch,
    MethodPreconditionViolated,
    BudgetExceeded,
    InvalidParams,
    ZeroRow,
    NotReduced,
    NotDelayFree,
    NotGammaBasis,
    NuNotDividingK,
    PreconditionViolated,
    UnequalRowDegrees,
    DependentRows,
    BadCounts,
    SizeMismatch,
    NotSuperregular,
    InconsistentBlocks,
    ClaimMismatch,
    ParseError,
    InternalInvariant,
};

std::string_view error_code_name(ErrorCode code);

/// Every library failure is reported through this type; `code()` is stable
/// and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace chainmdp
