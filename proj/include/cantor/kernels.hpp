#pragma once

#include <cstdint>
#include <vector>

namespace cantor::kernels {

/// Dense permutation of {0,..,n-1}; perm[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

/// Result of a breadth-first search of a Cayley graph of S_points.
/// Elements are indexed by Lehmer rank. parent_gen[r] is the last generator
/// applied on the canonical shortest word reaching r (-1 for the identity).
struct CayleyTable {
  int points = 0;
  std::vector<std::int8_t> dist;
  std::vector<std::int8_t> parent_gen;
  std::vector<Perm> gens;
  std::uint32_t eccentricity = 0;
  std::uint64_t reached = 0;
};

std::uint32_t lehmer_rank(const Perm& p);
Perm lehmer_unrank(std::uint32_t rank, int points);
std::uint64_t factorial(int n);

namespace serial {
/// out[i] = a[b[i]], i.e. a after b.
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);
std::uint64_t disagreement(const Perm& a, const Perm& b);
/// Length of the cycle through each point.
std::vector<std::uint32_t> orbit_lengths(const Perm& a);
CayleyTable cayley_bfs(int points, const std::vector<Perm>& gens);
}  // namespace serial

namespace omp {
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);
std::uint64_t disagreement(const Perm& a, const Perm& b);
/// Pointer-jumping min-label cycle detection.
std::vector<std::uint32_t> orbit_lengths(const Perm& a);
CayleyTable cayley_bfs(int points, const std::vector<Perm>& gens);
}  // namespace omp

/// Generators applied in order (first element first) that reach rank r along
/// the canonical BFS tree.
std::vector<int> word_to(const CayleyTable& table, std::uint32_t rank);

}  // namespace cantor::kernels
