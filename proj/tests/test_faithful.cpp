#include "doctest.h"

#include "cantor/faithful.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

namespace {

TranslateSets interval_sets(const PrefixExchange& t, int depth) {
  TranslateSets F;
  for (int n = 0; n <= depth; ++n) {
    std::vector<PrefixExchange> fn;
    for (int i = -n; i <= n; ++i) fn.push_back(power(t, i));
    F.push_back(fn);
  }
  return F;
}

bool disjoint_by_bitmap(const std::vector<DyadicSet>& sets, int level) {
  std::vector<char> seen(std::size_t{1} << level, 0);
  for (const auto& s : sets) {
    for (const auto& w : s.refine_to_level(level)) {
      if (seen[w.index()]) return false;
      seen[w.index()] = 1;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("word maps act right to left") {
  PrefixExchange a = transposition_U(2), b = finite_odometer(2);
  CHECK(word_map(FreeWord::parse("x1 x2"), {a, b}) == compose(a, b));
  CHECK(word_map(FreeWord::parse("x2^-1"), {a, b}) == b.inverse());
}

TEST_CASE("disjoint shrink") {
  DyadicSet s = disjoint_shrink(transposition_U(2), DyadicSet::full());
  CHECK(!s.empty());
  CHECK(s.disjoint(transposition_U(2).image(s)));
  CHECK(s.subset_of(transposition_U(2).support()));
  CHECK(oracle::thrown([] { disjoint_shrink(PrefixExchange{}, DyadicSet::full()); }) == ErrorCode::NowhereMoving);
  std::vector<PrefixExchange> F{PrefixExchange{}, finite_odometer(4), power(finite_odometer(4), 2)};
  DyadicSet d = disjoint_translates(F, DyadicSet::full());
  CHECK(!d.empty());
  std::vector<DyadicSet> images;
  for (const auto& f : F) images.push_back(f.image(d));
  CHECK(disjoint_by_bitmap(images, 8));
}

TEST_CASE("quarter shrink gives globally disjoint translates") {
  const int L = 10;
  PrefixExchange t = finite_odometer(L);
  for (int depth = 1; depth <= 3; ++depth) {
    TranslateSets F = interval_sets(t, depth);
    std::vector<DyadicSet> B;
    for (int n = 0; n <= depth; ++n) B.push_back(DyadicSet::cylinder(odometer_word(static_cast<std::uint64_t>(16 * n + 5), 6)));
    TranslateFamily fam = quarter_shrink(enforce_quarter(B, F), F);
    CHECK(fam.disjoint);
    std::vector<DyadicSet> images;
    int res = L;
    for (std::size_t n = 0; n < fam.A_seq.size(); ++n) {
      CHECK(!fam.A_seq[n].empty());
      for (const auto& f : F[n]) {
        images.push_back(f.image(fam.A_seq[n]));
        res = std::max(res, images.back().resolution());
      }
    }
    CHECK(disjoint_by_bitmap(images, res));
  }
}

TEST_CASE("quarter shrink with identity word sets") {
  TranslateSets F{{PrefixExchange{}}, {PrefixExchange{}}};
  std::vector<DyadicSet> B{DyadicSet::of({"0"}), DyadicSet::of({"0000"})};
  TranslateFamily fam = quarter_shrink(B, F);
  CHECK(fam.A_seq[0] == DyadicSet::of({"0001", "001", "01"}));
  CHECK(fam.A_seq[1] == DyadicSet::of({"0000"}));
  std::vector<DyadicSet> big{DyadicSet::of({"0"}), DyadicSet::of({"1"})};
  CHECK(oracle::thrown([&] { quarter_shrink(big, F); }) == ErrorCode::QuarterBoundViolated);
  TranslateSets overlapping{{PrefixExchange{}, transposition_U(2)}};
  CHECK(oracle::thrown([&] { quarter_shrink({DyadicSet::full()}, overlapping); }) ==
        ErrorCode::DisjointnessPreconditionFailed);
}

TEST_CASE("high faithfulness checks") {
  HFCheck one = hf_check({finite_odometer(6)}, 1, 6);
  CHECK(one.ok);
  CHECK(one.moving.is_full());
  PrefixExchange left = PrefixExchange::from_strings({{"00", "01"}, {"01", "00"}});
  PrefixExchange right = PrefixExchange::from_strings({{"10", "11"}, {"11", "10"}});
  HFCheck bad = hf_check({left, right}, 1, 2);
  CHECK(!bad.ok);
  CHECK(!bad.failing_word.empty());
}

TEST_CASE("towers") {
  OdometerHandle T{12};
  std::vector<DyadicSet> regions{DyadicSet::cylinder(odometer_word(1, 12))};
  TowerResult trivial = build_tower(T, regions, TowerConfig{});
  CHECK(trivial.ok());
  REQUIRE(trivial.levels.size() == 1);
  CHECK(trivial.levels[0].h_count == 1);

  regions.push_back(DyadicSet::cylinder(odometer_word(4, 12)));
  TowerResult two = build_tower(T, regions, TowerConfig{});
  CHECK(two.ok());
  CHECK(verify_tower_witnesses(T, two.generators, two));
  for (const auto& g : two.generators) CHECK(g.support().subset_of(two.carrier));
  CHECK(two.carrier == tower_carrier(T, regions));
  for (const auto& lv : two.levels) {
    int res = 0;
    for (const auto& s : lv.images) res = std::max(res, s.resolution());
    if (res <= 24) CHECK(disjoint_by_bitmap(lv.images, res));
  }
  // Breaking the generators on the carrier breaks the witnesses.
  std::vector<PrefixExchange> broken;
  for (const auto& g : two.generators) broken.push_back(g.inverse());
  bool any_order_three = false;
  for (const auto& lv : two.levels) any_order_three = any_order_three || lv.families > 0;
  if (any_order_three) CHECK(!verify_tower_witnesses(T, broken, two));
}
