#include "doctest.h"

#include <algorithm>

#include "cantor/kernels.hpp"
#include "oracle.hpp"

using namespace cantor;
using kernels::Perm;

TEST_CASE("parallel kernels match the serial references") {
  SeededRng rng(17);
  for (std::size_t n : {1u, 7u, 1000u, 1u << 16}) {
    Perm a = oracle::random_perm(rng, n), b = oracle::random_perm(rng, n);
    CHECK(kernels::omp::compose(a, b) == kernels::serial::compose(a, b));
    CHECK(kernels::omp::invert(a) == kernels::serial::invert(a));
    CHECK(kernels::omp::disagreement(a, b) == kernels::serial::disagreement(a, b));
    CHECK(kernels::omp::orbit_lengths(a) == kernels::serial::orbit_lengths(a));
  }
}

TEST_CASE("serial orbit lengths against a walk") {
  SeededRng rng(2);
  Perm a = oracle::random_perm(rng, 500);
  auto len = kernels::serial::orbit_lengths(a);
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    std::uint32_t x = a[i], steps = 1;
    while (x != i) {
      x = a[x];
      ++steps;
    }
    CHECK(len[i] == steps);
  }
}

TEST_CASE("Lehmer ranks are a bijection") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = kernels::factorial(n);
    std::vector<char> seen(total, 0);
    for (std::uint32_t r = 0; r < total; ++r) {
      Perm p = kernels::lehmer_unrank(r, n);
      CHECK(kernels::lehmer_rank(p) == r);
      seen[r] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(total));
  }
}

TEST_CASE("Cayley BFS serial and parallel agree") {
  // Transposition (0 1) and the 5-cycle generate S_5.
  Perm s{1, 0, 2, 3, 4}, c{1, 2, 3, 4, 0};
  Perm ci = kernels::serial::invert(c);
  auto a = kernels::serial::cayley_bfs(5, {c, ci, s});
  auto b = kernels::omp::cayley_bfs(5, {c, ci, s});
  CHECK(a.reached == 120);
  CHECK(b.reached == 120);
  CHECK(a.eccentricity == b.eccentricity);
  CHECK(a.dist == b.dist);
  for (std::uint32_t r = 0; r < 120; ++r) {
    auto w = kernels::word_to(a, r);
    CHECK(static_cast<int>(w.size()) == a.dist[r]);
    Perm x = oracle::identity(5);
    for (int g : w) x = kernels::serial::compose(a.gens[static_cast<std::size_t>(g)], x);
    CHECK(kernels::lehmer_rank(x) == r);
  }
}
