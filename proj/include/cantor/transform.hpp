#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cantor/prefix_map.hpp"

namespace cantor {

/// T_L, the level-L truncation of the odometer. Its truncation defect set
/// is N_{1^L}.
struct OdometerHandle {
  int level = 0;
  DyadicRational slack() const { return DyadicRational::pow2(level); }
};

/// Level-n +1-with-carry cycle (coordinate 0 is the least significant digit;
/// 1^n wraps to 0^n).
PrefixExchange finite_odometer(int n);
PrefixExchange odometer(const OdometerHandle& h);
/// Level-L word whose odometer position (coordinate 0 least significant) is x.
BinaryWord odometer_word(std::uint64_t x, int L);
/// The involution exchanging N_{0^{n-1}1} and N_{1^{n-1}0}; n >= 2.
PrefixExchange transposition_U(int n);
/// 2^p-th root of u whose extra p coordinates act as an odometer-ordered
/// counter on supp u.
PrefixExchange root_2p(const PrefixExchange& u, int p);

PrefixExchange power(const PrefixExchange& t, std::int64_t k);
DyadicRational uniform_distance(const PrefixExchange& t, const PrefixExchange& s);
/// t on the t-invariant set a, identity elsewhere. Throws NotInvariant.
PrefixExchange induced(const PrefixExchange& t, const DyadicSet& a);
/// Pairs of sigma refined by one trailing coordinate; sigma must have
/// resolution <= n. Identity pairs are omitted.
PairList embed_level(const PrefixExchange& sigma, int n);
/// Cycle of w under t, starting at w.
std::vector<BinaryWord> orbit_of_word(const PrefixExchange& t, const BinaryWord& w, std::size_t max_length = 1u << 24);

/// Cells permuted by t: a partition of supp t into cylinders that t maps onto
/// each other by pure prefix replacement, grouped into cycles.
struct CycleStructure {
  std::vector<std::vector<BinaryWord>> cycles;
  /// orbit length -> measure of the points with that orbit length (fixed
  /// points excluded).
  std::map<std::uint64_t, DyadicRational> length_measure;
  std::uint64_t order() const;
};
CycleStructure cycle_structure(const PrefixExchange& t);

/// True iff n = base^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t base);

}  // namespace cantor
