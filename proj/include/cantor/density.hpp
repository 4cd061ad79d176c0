#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/kernels.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

/// Breadth-first table of the level-n symmetric group under the generators
/// sigma_n (index 0), sigma_n^{-1} (index 1) and tau_n (index 2).
struct KappaResult {
  int n = 0;
  std::uint32_t kappa = 0;
  std::uint64_t reached = 0;
  kernels::CayleyTable table;
};

/// Cached, exact. Throws TooLarge unless 2 <= n <= 3.
const KappaResult& kappa_bfs(int n);
/// True iff sigma_n and tau_n generate all (2^n)! permutations.
bool generation_check(int n);
/// Size of the group generated by the given level-n exchanges.
std::uint64_t closure_size(int n, const std::vector<PrefixExchange>& gens);

struct GeneratorPlan {
  DyadicRational epsilon;
  std::vector<int> n_seq;
  std::vector<DyadicRational> delta_seq;
  std::vector<DyadicRational> eps_seq;
  std::map<int, std::uint32_t> kappa_table;
  int K = 0;
  int L = 0;
};

/// Greedy smallest n_k under the four plan invariants. eps_seq defaults to
/// 2^{-k-1}. Throws LevelTooSmall, KappaUnavailable, ConfigInfeasible.
GeneratorPlan plan_sequences(const DyadicRational& epsilon, int K, int L,
                             const std::optional<std::vector<DyadicRational>>& eps_override = std::nullopt);

struct LedgerEntry {
  int k = 0;
  int n_k = 0;
  DyadicRational distance;
  Rational bound;
  DyadicRational slack;
  bool pass = false;
};

struct AssembleResult {
  PrefixExchange U;
  /// sqrt[2^k]{U_{n_k}} induced on B_k.
  std::vector<PrefixExchange> factors;
  std::vector<DyadicSet> kept;
  std::vector<LedgerEntry> ledger;
  DyadicRational support_measure;
  bool support_ok = false;
  bool ledger_ok() const;
};

/// Product over k of the 2^k-th root of U_{n_k} induced on
/// supp U_{n_k} minus excluded[k]. Throws NotInvariant, DeltaExceeded.
AssembleResult assemble_U(const GeneratorPlan& plan, const std::vector<DyadicSet>& excluded);

struct SynthesisResult {
  /// Generator indices in application order: 0 = T_L, 1 = T_L^{-1}, 2 = U^{2^k}.
  std::vector<int> word;
  PrefixExchange realized;
  DyadicRational error;
  Rational allowance;
  bool within = false;
  std::string word_text() const;
};

/// Minimal BFS word for target at level n_k with T_L and U^{2^k} substituted.
/// Throws NoPlanEntry when k is out of range.
SynthesisResult synthesize_word(const PrefixExchange& target, const GeneratorPlan& plan, const PrefixExchange& U,
                                int k);

struct SynthesisSweep {
  std::uint64_t targets = 0;
  std::uint64_t within = 0;
  DyadicRational max_error;
  Rational allowance;
};

/// Every permutation of level n_k, run in parallel.
SynthesisSweep synthesize_all(const GeneratorPlan& plan, const PrefixExchange& U, int k);

}  // namespace cantor
