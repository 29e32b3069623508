#include "chainmdp/error.hpp"

namespace chainmdp {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::RejectedModulus: return "RejectedModulus";
        case ErrorCode::InvalidConvention: return "InvalidConvention";
        case ErrorCode::MixedRings: return "MixedRings";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::DigitNotInT: return "DigitNotInT";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::ZeroMatrix: return "ZeroMatrix";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::MethodPreconditionViolated: return "MethodPreconditionViolated";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ZeroRow: return "ZeroRow";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::NotDelayFree: return "NotDelayFree";
        case ErrorCode::NotGammaBasis: return "NotGammaBasis";
        case ErrorCode::NuNotDividingK: return "NuNotDividingK";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::UnequalRowDegrees: return "UnequalRowDegrees";
        case ErrorCode::DependentRows: return "DependentRows";
        case ErrorCode::BadCounts: return "BadCounts";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotSuperregular: return "NotSuperregular";
        case ErrorCode::InconsistentBlocks: return "InconsistentBlocks";
        case ErrorCode::ClaimMismatch: return "ClaimMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace chainmdp
