#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/group_word.hpp"
#include "cantor/rf_actions.hpp"
#include "cantor/transform.hpp"

namespace cantor {

/// Map of a free-group word with x_i -> gens[i-1]; letters act right to left.
PrefixExchange word_map(const FreeWord& w, const std::vector<PrefixExchange>& gens);

/// Nonempty A' in A with A' and t(A') disjoint, by greedy selection of the
/// pieces of t on A ∩ supp t. Throws NowhereMoving.
DyadicSet disjoint_shrink(const PrefixExchange& t, const DyadicSet& a);
/// Iterates disjoint_shrink over {f2^{-1} f1 : f1 != f2 in F}, so that the
/// translates (fA)_{f in F} become disjoint.
DyadicSet disjoint_translates(const std::vector<PrefixExchange>& F, const DyadicSet& a);

using TranslateSets = std::vector<std::vector<PrefixExchange>>;

struct TranslateFamily {
  TranslateSets F_seq;
  std::vector<DyadicSet> A_seq;
  bool disjoint = false;
};

/// True iff (f A_n)_{f in F_n, n} is pairwise disjoint.
bool family_disjoint(const TranslateSets& F_seq, const std::vector<DyadicSet>& A_seq);
/// Halves B_{n+1}, B_{n+2}, ... until |F_n||F_{n+1}| mu(B_{n+1}) < mu(B_n)/4.
std::vector<DyadicSet> enforce_quarter(std::vector<DyadicSet> B_seq, const TranslateSets& F_seq);
/// A_n := B_n minus the union over m >= 1 of F_n^{-1} F_{n+m} B_{n+m}.
/// Throws DisjointnessPreconditionFailed, QuarterBoundViolated.
TranslateFamily quarter_shrink(const std::vector<DyadicSet>& B_seq, const TranslateSets& F_seq);

struct HFCheck {
  bool ok = false;
  int radius = 0;
  std::size_t words = 0;
  /// Points moved by every checked word.
  DyadicSet moving;
  /// First word whose support empties the running intersection.
  std::string failing_word;
  DyadicRational slack;
};

/// Intersection of the supports of all nontrivial reduced words of length
/// <= r in the generators.
HFCheck hf_check(const std::vector<PrefixExchange>& gens, int r, int L);

/// Element of Z * F_m as alternating tokens, leftmost first.
struct ProductToken {
  bool is_t = false;
  int t_power = 0;
  FreeWord lambda;
};
using ProductWord = std::vector<ProductToken>;
std::string product_word_str(const ProductWord& h);

struct TowerConfig {
  int q = 3;
  int m = 1;
  /// Candidate truncation depths for the finite actions, tried in order.
  std::vector<int> action_depths{1, 2, 3, 4, 5, 6};
  std::size_t max_carrier = 200000;
  std::optional<DyadicRational> epsilon_override;
};

struct TowerLevel {
  int n = 0;
  DyadicSet region;
  DyadicSet witness;
  int action_depth = 0;
  std::size_t k_m = 0;
  std::size_t h_count = 0;
  DyadicRational epsilon;
  std::size_t families = 0;
  std::vector<ProductWord> words;
  /// Predicted h(A'_n), one per word.
  std::vector<DyadicSet> images;
  bool witnesses_disjoint = false;
};

struct TowerResult {
  std::vector<PrefixExchange> generators;
  std::vector<TowerLevel> levels;
  DyadicSet carrier;
  bool support_ok = false;
  bool ok() const;
};

/// Lambda = F_m action built level by level from cells inside regions[n], with
/// the odometer T_L as the Z-action and F_n = {T^i : |i| <= n},
/// G_n = reduced words of length <= n.
/// Throws DisjointnessPreconditionFailed, EpsilonTooLarge.
TowerResult build_tower(const OdometerHandle& T, const std::vector<DyadicSet>& regions, const TowerConfig& cfg);

/// Re-evaluates every h(A'_n) with the given generator maps and checks the
/// images against the recorded ones and for pairwise disjointness.
bool verify_tower_witnesses(const OdometerHandle& T, const std::vector<PrefixExchange>& gens, const TowerResult& tower);

/// Union of T^i(regions[n]) over |i| <= n.
DyadicSet tower_carrier(const OdometerHandle& T, const std::vector<DyadicSet>& regions);

}  // namespace cantor
