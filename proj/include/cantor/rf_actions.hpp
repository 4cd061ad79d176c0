#pragma once

#include <cstdint>
#include <vector>

#include "cantor/group_word.hpp"
#include "cantor/kernels.hpp"
#include "cantor/prefix_map.hpp"
#include "cantor/series.hpp"

namespace cantor {

/// Action of F_m on {0..size-1} with a basepoint. gens[i] is the image of
/// x_{i+1}; inv[i] its inverse.
struct PointedFiniteAction {
  int m = 0;
  std::vector<kernels::Perm> gens;
  std::vector<kernels::Perm> inv;
  std::uint32_t basepoint = 0;
  /// Truncation depth the action came from, 0 if not built from series.
  int depth = 0;

  std::size_t size() const { return gens.empty() ? 1 : gens[0].size(); }
  /// w . x with w = a_1..a_k acting as a_1(a_2(..a_k(x))).
  std::uint32_t apply(const FreeWord& w, std::uint32_t x) const;
  static PointedFiniteAction from_generators(std::vector<kernels::Perm> gens, std::uint32_t basepoint = 0);
};

/// Left translation of the subgroup generated by the images of x_i in the
/// depth-d series group, basepoint 1. Throws CarrierTooLarge.
PointedFiniteAction series_action(int q, int m, int d, std::size_t max_carrier = 200000);
std::vector<PointedFiniteAction> action_sequence(int q, int m, const std::vector<int>& depths,
                                                 std::size_t max_carrier = 200000);

/// Order of a permutation (lcm of cycle lengths).
std::uint64_t perm_order(const kernels::Perm& p);

/// Least depth d <= max_depth with magnus_image(w) != 1, or -1.
int freeness_depth(const FreeWord& w, int q, int m, int max_depth);

/// iota(x_i) on C_k is the lexicographic matching C_k -> C_{alpha_i(k)}; this
/// coincides with T_Phi^{alpha_i(k) - k} for the cycle closure of the chain of
/// lexicographic matchings C_0 -> C_1 -> ... . Throws UnequalMeasures, NotDisjoint.
std::vector<PrefixExchange> embed_finite_action(const PointedFiniteAction& a, const std::vector<DyadicSet>& cells);
/// Per generator, the moved pieces of embed_finite_action, for gluing several
/// families at once.
std::vector<std::vector<PartialDyadicIso>> embed_parts(const PointedFiniteAction& a, const std::vector<DyadicSet>& cells);
/// The closure T_Phi of the lexicographic chain through the cells.
PrefixExchange cell_cycle(const std::vector<DyadicSet>& cells);

}  // namespace cantor
