#pragma once

#include <stdexcept>
#include <string>

namespace whpp {

/// Failure categories surfaced by the library. The CLI maps ChecksumMismatch
/// to exit code 2 and everything else to exit code 1.
enum class ErrorCode {
  EmptyBases,
  UnequalCardinality,
  ExchangeAxiomViolation,
  OverlappingSets,
  DependentContraction,
  NotACircuitHyperplane,
  InvalidRank,
  UnsupportedFieldOrder,
  UnknownName,
  ChecksumMismatch,
  RankDeficient,
  SupportMismatch,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace whpp
