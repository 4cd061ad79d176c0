#include "doctest.h"

#include <algorithm>
#include <map>

#include "cantor/density.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

namespace {

// Longest shortest word over {sigma, sigma^-1, tau}, by a map-based BFS.
std::uint32_t eccentricity(int n) {
  oracle::Perm s = oracle::table(finite_odometer(n), n);
  oracle::Perm t = oracle::table(transposition_U(n), n);
  std::vector<oracle::Perm> gens{s, kernels::serial::invert(s), t};
  std::map<oracle::Perm, std::uint32_t> dist{{oracle::identity(s.size()), 0}};
  std::vector<oracle::Perm> frontier{oracle::identity(s.size())};
  std::uint32_t d = 0;
  while (!frontier.empty()) {
    std::vector<oracle::Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        oracle::Perm y = oracle::after(g, x);
        if (dist.emplace(y, d + 1).second) next.push_back(y);
      }
    }
    if (!next.empty()) ++d;
    frontier = std::move(next);
  }
  return d;
}

}  // namespace

TEST_CASE("kappa from BFS") {
  CHECK(kappa_bfs(2).kappa == eccentricity(2));
  CHECK(kappa_bfs(3).kappa == eccentricity(3));
  CHECK(kappa_bfs(2).reached == 24);
  CHECK(kappa_bfs(3).reached == 40320);
  CHECK(kappa_bfs(2).table.dist[kernels::lehmer_rank(oracle::identity(4))] == 0);
  CHECK(oracle::thrown([] { kappa_bfs(4); }) == ErrorCode::TooLarge);
}

TEST_CASE("generation") {
  CHECK(generation_check(2));
  CHECK(generation_check(3));
  CHECK(closure_size(3, {finite_odometer(3), transposition_U(3)}) == 40320);
  CHECK(closure_size(2, {finite_odometer(2)}) == 4);
}

TEST_CASE("plans") {
  GeneratorPlan one = plan_sequences(DyadicRational::pow2(1), 1, 14);
  REQUIRE(one.n_seq.size() == 1);
  CHECK(DyadicRational::pow2(one.n_seq[0]) < DyadicRational::pow2(1));
  GeneratorPlan none = plan_sequences(DyadicRational::pow2(1), 0, 14);
  CHECK(none.n_seq.empty());
  CHECK(assemble_U(none, {}).U.is_identity());
  CHECK(oracle::thrown([] { plan_sequences(DyadicRational::pow2(1), 2, 2); }) == ErrorCode::LevelTooSmall);
  CHECK(oracle::thrown([] { plan_sequences(DyadicRational::pow2(1), 3, 20); }) == ErrorCode::KappaUnavailable);
  GeneratorPlan two = plan_sequences(DyadicRational::pow2(1), 2, 14);
  for (std::size_t k = 0; k + 1 < two.n_seq.size(); ++k) CHECK(two.n_seq[k] < two.n_seq[k + 1]);
  for (std::size_t k = 0; k < two.delta_seq.size(); ++k) {
    CHECK(Rational(two.delta_seq[k]) < Rational(two.eps_seq[k]) / Rational(2 * two.kappa_table.at(two.n_seq[k])));
  }
}

TEST_CASE("assembled U and its ledger") {
  GeneratorPlan one = plan_sequences(DyadicRational::pow2(1), 1, 14);
  AssembleResult a1 = assemble_U(one, {DyadicSet{}});
  CHECK(a1.U == transposition_U(one.n_seq[0]));
  CHECK(a1.ledger[0].distance.is_zero());

  GeneratorPlan two = plan_sequences(DyadicRational::pow2(1), 2, 14);
  AssembleResult a = assemble_U(two, {DyadicSet{}, DyadicSet{}});
  CHECK(a.ledger[0].distance == DyadicRational::pow2(two.n_seq[1] - 1));
  DyadicRational sum;
  for (int n : two.n_seq) sum += DyadicRational::pow2(n - 1);
  CHECK(a.support_measure == a.U.support().measure());
  CHECK(a.support_measure <= sum);
  int L = std::max(two.L, a.U.resolution());
  oracle::Perm du = oracle::table(a.U, L);
  oracle::Perm u0 = oracle::table(transposition_U(two.n_seq[0]), L);
  CHECK(DyadicRational(static_cast<std::int64_t>(kernels::serial::disagreement(du, u0)), L) == a.ledger[0].distance);
}

TEST_CASE("word synthesis") {
  GeneratorPlan plan = plan_sequences(DyadicRational::pow2(1), 2, 14);
  AssembleResult a = assemble_U(plan, {DyadicSet{}, DyadicSet{}});
  SynthesisResult id = synthesize_word(PrefixExchange{}, plan, a.U, 0);
  CHECK(id.word.empty());
  CHECK(id.error.is_zero());
  SynthesisResult u = synthesize_word(transposition_U(plan.n_seq[0]), plan, a.U, 0);
  CHECK(u.word == std::vector<int>{2});
  CHECK(u.error == a.ledger[0].distance);
  CHECK(oracle::thrown([&] { synthesize_word(PrefixExchange{}, plan, a.U, 5); }) == ErrorCode::NoPlanEntry);
  SynthesisSweep s = synthesize_all(plan, a.U, 0);
  CHECK(s.targets == 24);
}
