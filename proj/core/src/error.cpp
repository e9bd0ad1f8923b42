#include "twistlab/error.hpp"

namespace twistlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonPartitionDifference: return "NonPartitionDifference";
    case ErrorCode::NotDistinctParts: return "NotDistinctParts";
    case ErrorCode::NoPAdicExpansion: return "NoPAdicExpansion";
    case ErrorCode::TooFewBeads: return "TooFewBeads";
    case ErrorCode::NotPRegular: return "NotPRegular";
    case ErrorCode::NotPRestricted: return "NotPRestricted";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::NoInsertion: return "NoInsertion";
    case ErrorCode::AmbiguousInsertion: return "AmbiguousInsertion";
    case ErrorCode::NotTwoPart: return "NotTwoPart";
    case ErrorCode::EqualSizeRequired: return "EqualSizeRequired";
    case ErrorCode::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::CongruenceViolated: return "CongruenceViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace twistlab
