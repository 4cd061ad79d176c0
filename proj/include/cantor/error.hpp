#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
  InvalidArgument,
  InsufficientResolution,
  NotInvariant,
  NotBijective,
  InvalidPreCycle,
  MeasureMismatch,
  IndivisibleCost,
  TooLarge,
  LevelTooSmall,
  KappaUnavailable,
  DeltaExceeded,
  NoPlanEntry,
  NotCoprime,
  SupportsOverlap,
  OrderMismatch,
  CarrierTooLarge,
  UnequalMeasures,
  NotDisjoint,
  NowhereMoving,
  QuarterBoundViolated,
  DisjointnessPreconditionFailed,
  EpsilonTooLarge,
  OrbitTooLarge,
  ConfigInfeasible,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cantor
