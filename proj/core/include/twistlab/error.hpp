#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistlab {

enum class ErrorCode {
  InvalidPartition,
  InvalidArgument,
  Overflow,
  NonPartitionDifference,
  NotDistinctParts,
  NoPAdicExpansion,
  TooFewBeads,
  NotPRegular,
  NotPRestricted,
  InvalidSymbol,
  NoInsertion,
  AmbiguousInsertion,
  NotTwoPart,
  EqualSizeRequired,
  PrimeTooSmall,
  HypothesisViolated,
  CongruenceViolated,
  TooLarge,
  SizeMismatch,
  Inconclusive,
  PostconditionFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// CLI prints; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistlab
