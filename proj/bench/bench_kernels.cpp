#include <benchmark/benchmark.h>

#include <numeric>

#include "cantor/kernels.hpp"
#include "cantor/rng.hpp"

using cantor::kernels::Perm;

namespace {

Perm random_perm(std::size_t n, std::uint64_t seed) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  cantor::SeededRng rng(seed);
  rng.shuffle(p);
  return p;
}

void BM_ComposeSerial(benchmark::State& st) {
  Perm a = random_perm(static_cast<std::size_t>(st.range(0)), 1), b = random_perm(a.size(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::serial::compose(a, b));
}

void BM_ComposeOmp(benchmark::State& st) {
  Perm a = random_perm(static_cast<std::size_t>(st.range(0)), 1), b = random_perm(a.size(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::omp::compose(a, b));
}

void BM_OrbitsSerial(benchmark::State& st) {
  Perm a = random_perm(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::serial::orbit_lengths(a));
}

void BM_OrbitsOmp(benchmark::State& st) {
  Perm a = random_perm(static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::omp::orbit_lengths(a));
}

std::vector<Perm> level3_gens() {
  // sigma_3 and tau_3 on the 8 level-3 words, coordinate 0 most significant.
  Perm sigma(8), tau(8);
  for (std::uint32_t i = 0; i < 8; ++i) {
    std::uint32_t rev = ((i & 1) << 2) | (i & 2) | ((i >> 2) & 1);
    std::uint32_t next = (rev + 1) & 7;
    sigma[i] = ((next & 1) << 2) | (next & 2) | ((next >> 2) & 1);
    tau[i] = i;
  }
  std::swap(tau[1], tau[6]);
  Perm inv(8);
  for (std::uint32_t i = 0; i < 8; ++i) inv[sigma[i]] = i;
  return {sigma, inv, tau};
}

void BM_CayleySerial(benchmark::State& st) {
  auto gens = level3_gens();
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::serial::cayley_bfs(8, gens).eccentricity);
}

void BM_CayleyOmp(benchmark::State& st) {
  auto gens = level3_gens();
  for (auto _ : st) benchmark::DoNotOptimize(cantor::kernels::omp::cayley_bfs(8, gens).eccentricity);
}

}  // namespace

BENCHMARK(BM_ComposeSerial)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_ComposeOmp)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_OrbitsSerial)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_OrbitsOmp)->Range(1 << 12, 1 << 22);
BENCHMARK(BM_CayleySerial);
BENCHMARK(BM_CayleyOmp);

BENCHMARK_MAIN();
