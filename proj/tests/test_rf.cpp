#include "doctest.h"

#include <numeric>

#include "cantor/commuting.hpp"
#include "cantor/rf_actions.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

TEST_CASE("free words") {
  FreeWord w = FreeWord::parse("x1 x2^-1 x2 x1");
  CHECK(!w.is_reduced());
  CHECK(w.reduced().str() == "x1 x1");
  CHECK(FreeWord::parse("x_1 x_2").str() == "x1 x2");
  CHECK(FreeWord::parse("1").empty());
  CHECK(w.reduced().times(w.reduced().inverse()).empty());
  auto words = enumerate_reduced(2, 3);
  CHECK(words.size() == 4 + 12 + 36);
  for (const auto& x : words) CHECK(x.is_reduced());
  CHECK(enumerate_reduced(2, 2, true).front().empty());
}

TEST_CASE("truncated series") {
  CHECK(magnus_image(FreeWord{}, 3, 2, 3).is_one());
  CHECK(magnus_image(FreeWord::parse("x1"), 3, 2, 3) == TruncatedSeries::generator(1, 3, 2, 3));
  TruncatedSeries c = magnus_image(FreeWord::parse("x1 x2 x1^-1 x2^-1"), 3, 2, 2);
  CHECK(!c.is_one());
  CHECK(c.coefficient({1, 2}) == 1);
  CHECK(c.coefficient({2, 1}) == 2);
  CHECK(c.coefficient({1}) == 0);
  CHECK(c.str() == "1 + X1X2 + 2X2X1");
  TruncatedSeries g = TruncatedSeries::generator(2, 5, 2, 4);
  CHECK((g * g.inverse()).is_one());
  // (1 + X1)^3 = 1 + X1^3 over the 3-element field.
  TruncatedSeries x = TruncatedSeries::generator(1, 3, 1, 5);
  TruncatedSeries cube = x * x * x;
  CHECK(cube.coefficient({1}) == 0);
  CHECK(cube.coefficient({1, 1, 1}) == 1);
}

TEST_CASE("series actions") {
  auto acts = action_sequence(3, 2, {1, 2});
  CHECK(acts[0].size() == 9);
  CHECK(acts[1].size() == 27);
  for (const auto& a : acts) {
    for (const auto& g : a.gens) CHECK(perm_order(g) == 3);
    CHECK(a.apply(FreeWord{}, a.basepoint) == a.basepoint);
  }
  PointedFiniteAction one = series_action(3, 1, 4);
  CHECK(one.size() == 9);
  CHECK(oracle::thrown([] { series_action(3, 2, 6, 100); }) == ErrorCode::CarrierTooLarge);
  CHECK(freeness_depth(FreeWord::parse("x1 x2 x1^-1 x2^-1"), 3, 2, 6) == 2);
  CHECK(freeness_depth(FreeWord::parse("x1^-1"), 3, 2, 6) == 1);
  CHECK(freeness_depth(FreeWord{}, 3, 2, 6) == -1);
}

TEST_CASE("pointed actions act right to left") {
  PointedFiniteAction a = PointedFiniteAction::from_generators({{1, 2, 0}, {1, 0, 2}});
  // x1 x2 . 0 = x1(x2(0)) = x1(1) = 2.
  CHECK(a.apply(FreeWord::parse("x1 x2"), 0) == 2);
  CHECK(a.apply(FreeWord::parse("x1^-1"), 0) == 2);
}

TEST_CASE("embedding finite actions") {
  std::vector<DyadicSet> cells{DyadicSet::of({"000"}), DyadicSet::of({"001"}), DyadicSet::of({"010"})};
  PointedFiniteAction rot = PointedFiniteAction::from_generators({{1, 2, 0}});
  auto iota = embed_finite_action(rot, cells);
  CHECK(iota[0] == PrefixExchange::from_strings({{"000", "001"}, {"001", "010"}, {"010", "000"}}));
  CHECK(orbit_of_word(iota[0], BinaryWord::parse("000")).size() == 3);
  PointedFiniteAction triv = PointedFiniteAction::from_generators({{0, 1, 2}});
  CHECK(embed_finite_action(triv, cells)[0].is_identity());
  CHECK(oracle::thrown([&] {
          embed_finite_action(rot, {DyadicSet::of({"000"}), DyadicSet::of({"01"}), DyadicSet::of({"10"})});
        }) == ErrorCode::UnequalMeasures);
  CHECK(oracle::thrown([&] {
          embed_finite_action(rot, {DyadicSet::of({"000"}), DyadicSet::of({"000"}), DyadicSet::of({"010"})});
        }) == ErrorCode::NotDisjoint);
}

TEST_CASE("embedding equals powers of the cell cycle") {
  SeededRng rng(31);
  PointedFiniteAction a = series_action(3, 2, 2);
  std::vector<DyadicSet> cells;
  for (std::uint64_t k = 0; k < a.size(); ++k) {
    cells.push_back(DyadicSet::of({BinaryWord::from_index(2 * k, 6).str(), BinaryWord::from_index(2 * k + 1, 6).str() + "0"}));
  }
  auto iota = embed_finite_action(a, cells);
  PrefixExchange cycle = cell_cycle(cells);
  for (std::size_t i = 0; i < iota.size(); ++i) {
    for (std::uint32_t k = 0; k < a.size(); ++k) {
      auto shift = static_cast<std::int64_t>(a.gens[i][k]) - static_cast<std::int64_t>(k);
      PrefixExchange pk = power(cycle, shift);
      for (const auto& w : cells[k].words()) {
        BinaryWord x = w.concat(BinaryWord::from_index(rng.below(64), 6));
        CHECK(iota[i].apply(x) == pk.apply(x));
      }
    }
  }
}

TEST_CASE("orbit exponents and reconstruction exponents") {
  CHECK(orbit_exponent(8, 2) == 3);
  CHECK(orbit_exponent(6, 2) == -1);
  CHECK(orbit_exponent(12, 6) == 2);
  CHECK(reconstruction_exponent(3, 2, 2) == 7);
  CHECK(oracle::thrown([] { reconstruction_exponent(4, 6, 1); }) == ErrorCode::NotCoprime);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t q : {3u, 4u, 5u, 9u}) {
      if (std::gcd(p, q) != 1) continue;
      for (int N = 1; N <= 3; ++N) {
        std::uint64_t pn = 1, qn = 1;
        for (int i = 0; i < N; ++i) {
          pn *= p;
          qn *= q;
        }
        std::uint64_t l = 1;
        while ((l * qn) % pn != 1 % pn) ++l;
        CHECK(reconstruction_exponent(p, q, N) == l);
      }
    }
  }
}

TEST_CASE("factor recovery") {
  FactorSpec t{PrefixExchange::from_strings({{"00", "01"}, {"01", "00"}}), 2};
  FactorSpec u{PrefixExchange::from_strings({{"100", "101"}, {"101", "110"}, {"110", "100"}}), 3};
  Recovery r = reconstruct_factor(t, u);
  CHECK(r.distance.is_zero());
  CHECK(r.map == t.map);
  CHECK(reconstruct_factor(t, FactorSpec{PrefixExchange{}, 3}).map == t.map);
  CHECK(oracle::thrown([&] { reconstruct_factor(t, FactorSpec{transposition_U(2), 3}); }) ==
        ErrorCode::SupportsOverlap);
  CHECK(oracle::thrown([&] { reconstruct_factor(t, FactorSpec{u.map, 4}); }) == ErrorCode::NotCoprime);
  CHECK(oracle::thrown([&] { max_orbit_exponent(u.map, 2); }) == ErrorCode::OrderMismatch);
  auto single = reconstruct_all({t});
  CHECK(single[0].map == t.map);
  SeededRng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto factors = random_commuting_factors(rng, {2, 3, 5}, 6);
    auto rec = reconstruct_all(factors);
    oracle::Perm prod = oracle::identity(64);
    for (const auto& f : factors) prod = oracle::after(oracle::table(f.map, 6), prod);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(rec[k].distance.is_zero());
      oracle::Perm acc = oracle::identity(64), base = prod;
      for (std::uint64_t e = rec[k].exponent; e; e >>= 1) {
        if (e & 1) acc = oracle::after(base, acc);
        base = oracle::after(base, base);
      }
      CHECK(acc == oracle::table(factors[k].map, 6));
    }
  }
}
