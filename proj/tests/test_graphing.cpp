#include "doctest.h"

#include "cantor/graphing.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

TEST_CASE("pre-p-cycle validation") {
  auto bad = validate_pre_p_cycle(std::vector<StringPairs>{{{"0", "10"}}, {{"10", "11"}}});
  CHECK(!bad.ok);
  REQUIRE(!bad.violations.empty());
  CHECK(bad.violations[0] == "measure mismatch in member 1");
  PrePCycle good{{PartialDyadicIso::from_strings({{"00", "01"}}), PartialDyadicIso::from_strings({{"01", "10"}})}};
  CHECK(validate_pre_p_cycle(good).ok);
  CHECK(validate_pre_p_cycle(PrePCycle{}).ok);
  PrePCycle broken{{PartialDyadicIso::from_strings({{"00", "01"}}), PartialDyadicIso::from_strings({{"10", "11"}})}};
  CHECK(!validate_pre_p_cycle(broken).ok);
  CHECK(oracle::thrown([&] { cycle_closure(broken); }) == ErrorCode::InvalidPreCycle);
}

TEST_CASE("cycle closure") {
  PrePCycle c{{PartialDyadicIso::from_strings({{"00", "01"}}), PartialDyadicIso::from_strings({{"01", "10"}})}};
  PrefixExchange t = cycle_closure(c);
  CHECK(t == PrefixExchange::from_strings({{"00", "01"}, {"01", "10"}, {"10", "00"}}));
  CHECK(t.apply(BinaryWord::parse("11")) == BinaryWord::parse("11"));
  PrePCycle two{{PartialDyadicIso::from_strings({{"000", "001"}})}};
  CHECK(cycle_closure(two) == PrefixExchange::from_strings({{"000", "001"}, {"001", "000"}}));
}

TEST_CASE("closures of random chains have orbits of size 1 or p") {
  SeededRng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int L = 6;
    int p = 2 + static_cast<int>(rng.below(5));
    oracle::Perm pts = oracle::random_perm(rng, std::size_t{1} << L);
    std::size_t per = 1 + rng.below((pts.size() / static_cast<std::size_t>(p)));
    std::vector<DyadicSet> slots;
    for (int j = 0; j < p; ++j) {
      std::vector<BinaryWord> w;
      for (std::size_t i = 0; i < per; ++i) w.push_back(BinaryWord::from_index(pts[static_cast<std::size_t>(j) * per + i], L));
      slots.push_back(DyadicSet::canonicalize(w));
    }
    PrePCycle c;
    for (int j = 0; j + 1 < p; ++j) c.members.push_back(match_equal_measure(slots[static_cast<std::size_t>(j)], slots[static_cast<std::size_t>(j + 1)]));
    REQUIRE(validate_pre_p_cycle(c).ok);
    oracle::Perm t = oracle::table(cycle_closure(c), L);
    for (auto len : kernels::serial::orbit_lengths(t)) CHECK((len == 1 || len == static_cast<std::uint32_t>(p)));
  }
}

TEST_CASE("lexicographic matching") {
  CHECK(match_equal_measure(DyadicSet::of({"0"}), DyadicSet::of({"1"})) == PartialDyadicIso::from_strings({{"0", "1"}}));
  CHECK(match_equal_measure(DyadicSet::of({"00", "11"}), DyadicSet::of({"01", "10"})) ==
        PartialDyadicIso::from_strings({{"00", "01"}, {"11", "10"}}));
  CHECK(oracle::thrown([] { match_equal_measure(DyadicSet::of({"0"}), DyadicSet::of({"10"})); }) ==
        ErrorCode::MeasureMismatch);
  SeededRng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int L = 7;
    oracle::Perm pts = oracle::random_perm(rng, std::size_t{1} << L);
    std::size_t k = 1 + rng.below(60);
    std::vector<BinaryWord> a, b;
    for (std::size_t i = 0; i < k; ++i) {
      a.push_back(BinaryWord::from_index(pts[i], L));
      b.push_back(BinaryWord::from_index(pts[k + i], L));
    }
    PartialDyadicIso m = match_equal_measure(DyadicSet::canonicalize(a), DyadicSet::canonicalize(b));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i) CHECK(m.apply(a[i]) == b[i]);
  }
}

TEST_CASE("splitting graphings") {
  Graphing one{{PartialDyadicIso::from_strings({{"0", "1"}})}};
  auto halves = split_into_subgraphings(one, 2, 10);
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].members[0].domain() == DyadicSet::of({"00"}));
  CHECK(halves[1].members[0].domain() == DyadicSet::of({"01"}));
  Graphing g{{PartialDyadicIso::from_strings({{"0", "1"}}), PartialDyadicIso::from_strings({{"10", "11"}})}};
  auto thirds = split_into_subgraphings(g, 3, 10);
  REQUIRE(thirds.size() == 3);
  for (const auto& t : thirds) CHECK(t.cost() == DyadicRational::pow2(2));
  CHECK(oracle::thrown([&] { split_into_subgraphings(one, 3, 4); }) == ErrorCode::IndivisibleCost);
}
