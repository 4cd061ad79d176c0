#include "doctest.h"

#include <numeric>

#include "cantor/assembly.hpp"
#include "cantor/transform.hpp"
#include "oracle.hpp"

using namespace cantor;

TEST_CASE("configuration validation") {
  PipelineConfig c;
  c.q = 7;  // 7 | p+2 = 7
  CHECK(oracle::thrown([&] { validate_config(c); }) == ErrorCode::InvalidArgument);
  c = PipelineConfig{};
  c.q = 4;
  CHECK(oracle::thrown([&] { validate_config(c); }) == ErrorCode::InvalidArgument);
  c = PipelineConfig{};
  c.phi.members.push_back(PartialDyadicIso::from_strings({{"0", "1"}}));
  // epsilon = 3/20 needs kappa(6), which is out of reach
  CHECK(oracle::thrown([&] { run_pipeline(c); }) == ErrorCode::KappaUnavailable);
  c.phi.members.push_back(PartialDyadicIso::from_strings({{"1", "0"}}));
  CHECK(oracle::thrown([&] { run_pipeline(c); }) == ErrorCode::ConfigInfeasible);
  c = PipelineConfig{};
  c.p = 0;
  CHECK(oracle::thrown([&] { validate_config(c); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(validate_config(PipelineConfig{}));
}

TEST_CASE("Schreier graphs") {
  SchreierGraph cyc = schreier_orbit({finite_odometer(5)}, BinaryWord::parse("00000"));
  CHECK(cyc.vertices.size() == 32);
  CHECK(cyc.edge_regular());
  SchreierGraph loop = schreier_orbit({PrefixExchange{}}, BinaryWord::parse("01"));
  CHECK(loop.vertices.size() == 1);
  CHECK(loop.edges[0][0] == 0);
  CHECK(oracle::thrown([] { schreier_orbit({finite_odometer(12)}, BinaryWord::parse("0"), 100); }) ==
        ErrorCode::OrbitTooLarge);
  SchreierGraph ball = schreier_ball({finite_odometer(8)}, BinaryWord::parse("0"), 3);
  CHECK(ball.vertices.size() == 7);
}

TEST_CASE("Folner ratios") {
  SchreierGraph cyc = schreier_orbit({finite_odometer(4)}, BinaryWord::parse("0000"));
  std::vector<std::size_t> all(cyc.vertices.size());
  std::iota(all.begin(), all.end(), 0);
  auto full = folner_witness(cyc, {all});
  CHECK(full[0].ratios[0] == Rational(0));
  auto single = folner_witness(cyc, {{0}});
  CHECK(single[0].ratios[0] == Rational(2));
  for (int n = 1; n <= 3; ++n) {
    auto path = t_interval(cyc, 0, 0, n);
    REQUIRE(path.size() == static_cast<std::size_t>(2 * n + 1));
    CHECK(folner_witness(cyc, {path})[0].ratios[0] == Rational(2, 2 * n + 1));
  }
}

TEST_CASE("stabilizer signatures") {
  auto id = stabilizer_signature({PrefixExchange{}}, BinaryWord::parse("0"), 3);
  CHECK(id.words.size() == enumerate_reduced(1, 3, true).size());
  auto odo = stabilizer_signature({finite_odometer(6)}, BinaryWord::parse("000000"), 5);
  REQUIRE(odo.words.size() == 1);
  CHECK(odo.words[0].empty());
}

TEST_CASE("default pipeline certificates") {
  PipelineResult r = run_pipeline(PipelineConfig{});
  CHECK(r.supports_disjoint);
  CHECK(r.orders_ok);
  CHECK(r.budget_ok);
  CHECK(r.recovery_ok);
  CHECK(r.tower.ok());
  CHECK(r.hf.ok);
  CHECK(r.amenability_ok);
  CHECK(r.signatures_distinct);
  for (std::size_t n = 0; n < r.amenability.size(); ++n) {
    CHECK(r.amenability[n].t_ratio == Rational(2, 2 * static_cast<std::int64_t>(n) + 1));
  }
  CHECK(r.generators.size() == 2);
  CHECK(r.generators[0] == finite_odometer(14));
}

TEST_CASE("pipeline with a small graphing") {
  PipelineConfig c;
  c.p = 1;
  c.q = 5;
  c.K = 1;
  c.phi.members.push_back(PartialDyadicIso::from_strings({{"110", "111"}}));
  PipelineResult r = run_pipeline(c);
  REQUIRE(r.C.size() == 1);
  CHECK(!r.C[0].is_identity());
  CycleStructure cs = cycle_structure(r.C[0]);
  for (const auto& [len, m] : cs.length_measure) CHECK(len == 3);
  CHECK(r.supports_disjoint);
  CHECK(r.orders_ok);
  CHECK(r.budget_ok);
  CHECK(r.recovery_ok);
}
