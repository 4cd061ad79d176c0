#pragma once

#include <cstdint>
#include <vector>

#include "cantor/prefix_map.hpp"
#include "cantor/rng.hpp"

namespace cantor {

/// An exchange whose orbit lengths all divide a power of base.
struct FactorSpec {
  PrefixExchange map;
  std::uint64_t base = 2;
};

/// Least e with n | base^e, or -1 if no power of base is divisible by n.
int orbit_exponent(std::uint64_t n, std::uint64_t base);
/// Largest orbit_exponent over the nontrivial orbit lengths of t; throws
/// OrderMismatch if some orbit length does not divide a power of base.
int max_orbit_exponent(const PrefixExchange& t, std::uint64_t base);
bool valid_factor(const FactorSpec& f);

/// Least l >= 1 with l q^N = 1 mod p^N. Throws NotCoprime, TooLarge.
std::uint64_t reconstruction_exponent(std::uint64_t p, std::uint64_t q, int N);

struct Recovery {
  PrefixExchange map;
  std::uint64_t exponent = 0;
  DyadicRational distance;
};

/// (TU)^{l q^N}, which equals T exactly when all orbits are finite.
/// Throws SupportsOverlap, NotCoprime, OrderMismatch.
Recovery reconstruct_factor(const FactorSpec& t, const FactorSpec& u);
/// Each factor from powers of the full product.
std::vector<Recovery> reconstruct_all(const std::vector<FactorSpec>& factors);

/// Random factors on a shuffled partition of the level-`level` words, one
/// chunk per base, each with cycle lengths powers of its base.
std::vector<FactorSpec> random_commuting_factors(SeededRng& rng, const std::vector<std::uint64_t>& bases, int level);

}  // namespace cantor
