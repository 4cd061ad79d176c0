#include "doctest.h"

#include <map>

#include "cantor/level_perm.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

namespace {

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

}  // namespace

TEST_CASE("apply, compose, power") {
  PrefixExchange u2 = transposition_U(2);
  PrefixExchange t2 = finite_odometer(2);
  CHECK(u2.apply(W("010")) == W("100"));
  CHECK(PrefixExchange{}.apply(W("0110")) == W("0110"));
  CHECK(compose(t2, t2.inverse()).is_identity());
  CHECK(compose(u2, u2).is_identity());
  CHECK(compose(t2, t2).apply(W("00")) == W("01"));
  CHECK(power(u2, 2).is_identity());
  CHECK(power(t2, 4).is_identity());
  CHECK(power(root_2p(u2, 1), 2) == u2);
  CHECK(power(t2, -1) == t2.inverse());
}

TEST_CASE("supports and the uniform metric") {
  CHECK(transposition_U(3).support() == DyadicSet::of({"001", "110"}));
  CHECK(PrefixExchange{}.support().empty());
  CHECK(root_2p(transposition_U(2), 2).support() == DyadicSet::of({"01", "10"}));
  PrefixExchange u2 = transposition_U(2);
  CHECK(uniform_distance(u2, u2).is_zero());
  CHECK(uniform_distance(u2, PrefixExchange{}) == DyadicRational::pow2(1));
  for (int L = 1; L <= 10; ++L) {
    CHECK(uniform_distance(finite_odometer(L), finite_odometer(L + 1)) == DyadicRational::pow2(L));
  }
}

TEST_CASE("induced maps") {
  PrefixExchange u2 = transposition_U(2);
  CHECK(induced(u2, DyadicSet::full()) == u2);
  CHECK(induced(u2, DyadicSet{}).is_identity());
  CHECK(induced(u2, DyadicSet::of({"011", "101"})) ==
        PrefixExchange::from_strings({{"011", "101"}, {"101", "011"}}));
  CHECK(oracle::thrown([&] { induced(u2, DyadicSet::of({"011", "100"})); }) == ErrorCode::NotInvariant);
}

TEST_CASE("embed_level appends both bits") {
  PairList p = embed_level(transposition_U(2), 2);
  PrefixExchange e = PrefixExchange::from_pairs(p);
  CHECK(e == PrefixExchange::from_strings({{"010", "100"}, {"011", "101"}, {"100", "010"}, {"101", "011"}}));
  CHECK(embed_level(PrefixExchange{}, 3).empty());
}

TEST_CASE("finite odometer is +1 with right carry") {
  PrefixExchange t2 = finite_odometer(2);
  CHECK(t2.apply(W("00")) == W("10"));
  CHECK(t2.apply(W("10")) == W("01"));
  CHECK(t2.apply(W("01")) == W("11"));
  CHECK(t2.apply(W("11")) == W("00"));
  for (int n = 1; n <= 8; ++n) {
    PrefixExchange t = finite_odometer(n);
    CHECK(power(t, std::int64_t{1} << n).is_identity());
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      BinaryWord w = BinaryWord::from_index(i, n);
      CHECK(t.apply(w).str() == oracle::odometer_step(w.str()));
    }
  }
  CHECK(odometer_word(6, 4) == W("0110"));
  CHECK(finite_odometer(4).apply(odometer_word(6, 4)) == odometer_word(7, 4));
}

TEST_CASE("transposition U_n") {
  CHECK(transposition_U(2) == PrefixExchange::from_strings({{"01", "10"}, {"10", "01"}}));
  for (int n = 2; n <= 8; ++n) {
    oracle::Perm t = oracle::table(transposition_U(n), n);
    std::uint64_t moved = 0;
    for (std::uint32_t i = 0; i < t.size(); ++i) moved += t[i] != i;
    CHECK(moved == 2);
    CHECK(transposition_U(n).support().measure() == DyadicRational::pow2(n - 1));
  }
  CHECK(oracle::thrown([] { transposition_U(1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("2^p-th roots against dense powers") {
  PrefixExchange v = root_2p(transposition_U(2), 1);
  CHECK(cycle_structure(v).order() == 4);
  CHECK(power(v, 2) == transposition_U(2));
  CHECK(root_2p(transposition_U(2), 0) == transposition_U(2));
  SeededRng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int q = 1 + static_cast<int>(rng.below(4));
    int p = static_cast<int>(rng.below(5));
    PrefixExchange u = PrefixExchange::from_level_images(q, oracle::random_perm(rng, std::size_t{1} << q));
    PrefixExchange r = root_2p(u, p);
    oracle::Perm dr = oracle::table(r, q + p), du = oracle::table(u, q + p);
    oracle::Perm acc = oracle::identity(dr.size());
    for (int i = 0; i < (1 << p); ++i) acc = oracle::after(dr, acc);
    CHECK(acc == du);
    CHECK(r.support() == u.support());
  }
}

TEST_CASE("orbits and cycle structure") {
  auto orbit = orbit_of_word(transposition_U(2), W("01"));
  CHECK(orbit == std::vector<BinaryWord>{W("01"), W("10")});
  CHECK(orbit_of_word(PrefixExchange{}, W("0110")).size() == 1);
  CHECK(orbit_of_word(finite_odometer(3), W("000")).size() == 8);
  SeededRng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    int L = 2 + static_cast<int>(rng.below(5));
    oracle::Perm p = oracle::random_perm(rng, std::size_t{1} << L);
    PrefixExchange t = PrefixExchange::from_level_images(L, p);
    CycleStructure cs = cycle_structure(t);
    std::map<std::uint64_t, std::int64_t> dense;
    for (auto len : kernels::serial::orbit_lengths(p)) {
      if (len > 1) dense[len] += 1;
    }
    CHECK(cs.length_measure.size() == dense.size());
    for (const auto& [len, count] : dense) CHECK(cs.length_measure[len] == DyadicRational(count, L));
  }
}

TEST_CASE("construction errors") {
  CHECK(oracle::thrown([] { PrefixExchange::from_strings({{"0", "1"}}); }) == ErrorCode::NotBijective);
  CHECK(oracle::thrown([] { PrefixExchange::from_strings({{"0", "10"}, {"10", "0"}}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(oracle::thrown([] { transposition_U(3).apply(W("0")); }) == ErrorCode::InsufficientResolution);
  PartialDyadicIso a = PartialDyadicIso::from_strings({{"00", "01"}});
  CHECK(a.domain() == DyadicSet::of({"00"}));
  CHECK(a.range() == DyadicSet::of({"01"}));
  CHECK(!a.apply(W("11")).has_value());
  CHECK(oracle::thrown([&] { glue({a}); }) == ErrorCode::NotBijective);
  CHECK(glue({a, a.inverse()}) == PrefixExchange::from_strings({{"00", "01"}, {"01", "00"}}));
}

TEST_CASE("compose and inverse against dense tables") {
  SeededRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int L = 1 + static_cast<int>(rng.below(6));
    oracle::Perm a = oracle::random_perm(rng, std::size_t{1} << L);
    oracle::Perm b = oracle::random_perm(rng, std::size_t{1} << L);
    PrefixExchange ta = PrefixExchange::from_level_images(L, a), tb = PrefixExchange::from_level_images(L, b);
    CHECK(oracle::table(compose(ta, tb), L) == oracle::after(a, b));
    CHECK(oracle::table(ta.inverse(), L) == kernels::serial::invert(a));
    CHECK(LevelPerm::of(ta, L).image == a);
    std::uint64_t diff = kernels::serial::disagreement(a, b);
    CHECK(uniform_distance(ta, tb) == DyadicRational(static_cast<std::int64_t>(diff), L));
    CHECK(uniform_distance(LevelPerm::of(ta, L), LevelPerm::of(tb, L)) == uniform_distance(ta, tb));
  }
}
