#pragma once

#include <string>
#include <vector>

#include "cantor/prefix_map.hpp"

namespace cantor {

/// Finite family of partial isos.
struct Graphing {
  std::vector<PartialDyadicIso> members;
  /// Sum of domain measures.
  DyadicRational cost() const;
};

/// Ordered chain phi_1, ..., phi_{p-1}.
struct PrePCycle {
  std::vector<PartialDyadicIso> members;
  int p() const { return static_cast<int>(members.size()) + 1; }
};

struct CycleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks rng phi_i = dom phi_{i+1} and pairwise disjointness of
/// dom phi_1, ..., dom phi_{p-1}, rng phi_{p-1}. Members are 1-based in messages.
CycleReport validate_pre_p_cycle(const PrePCycle& c);
/// Same check on raw pair lists, so pieces of unequal length are reported as
/// a measure mismatch instead of being rejected at construction.
CycleReport validate_pre_p_cycle(const std::vector<StringPairs>& raw);

/// phi_i on dom phi_i, the inverse chain on rng phi_{p-1}, identity elsewhere.
/// Throws InvalidPreCycle.
PrefixExchange cycle_closure(const PrePCycle& c);

/// Pairs the cylinders of a and b in lexicographic order after refinement to a
/// common level. Throws MeasureMismatch.
PartialDyadicIso match_equal_measure(const DyadicSet& a, const DyadicSet& b);

/// Splits each member's domain left to right into m graphings of equal cost.
/// Throws IndivisibleCost if cost/m has no dyadic form at or below max_level.
std::vector<Graphing> split_into_subgraphings(const Graphing& g, int m, int max_level);

}  // namespace cantor
