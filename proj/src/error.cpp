#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InsufficientResolution: return "InsufficientResolution";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::InvalidPreCycle: return "InvalidPreCycle";
    case ErrorCode::MeasureMismatch: return "MeasureMismatch";
    case ErrorCode::IndivisibleCost: return "IndivisibleCost";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LevelTooSmall: return "LevelTooSmall";
    case ErrorCode::KappaUnavailable: return "KappaUnavailable";
    case ErrorCode::DeltaExceeded: return "DeltaExceeded";
    case ErrorCode::NoPlanEntry: return "NoPlanEntry";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SupportsOverlap: return "SupportsOverlap";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::UnequalMeasures: return "UnequalMeasures";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NowhereMoving: return "NowhereMoving";
    case ErrorCode::QuarterBoundViolated: return "QuarterBoundViolated";
    case ErrorCode::DisjointnessPreconditionFailed: return "DisjointnessPreconditionFailed";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorCode::ConfigInfeasible: return "ConfigInfeasible";
  }
  return "Unknown";
}

}  // namespace cantor
