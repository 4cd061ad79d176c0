#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/json_io.hpp"
#include "cantor/rng.hpp"

namespace cantor {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  /// Deterministic payload: no timing.
  Json data;
};

/// Runs acceptance criteria 1..10 (or only the given one). quick trims the
/// random sample sizes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool quick, std::optional<int> only = std::nullopt);

/// JSON of the results without timing, suitable for byte comparison.
Json acceptance_certificate(std::uint64_t seed, bool quick, const std::vector<CriterionResult>& results);

}  // namespace cantor
