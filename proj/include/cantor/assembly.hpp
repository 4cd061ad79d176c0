#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/density.hpp"
#include "cantor/faithful.hpp"
#include "cantor/graphing.hpp"

namespace cantor {

struct PipelineConfig {
  int m = 1;
  Graphing phi;
  int p = 5;
  int q = 3;
  int L = 14;
  int K = 2;
  /// Reservoirs A_0..A_{tower_depth}.
  int tower_depth = 2;
  int hf_radius = 2;
  int stab_radius = 4;
  std::vector<int> action_depths{1, 2, 3, 4, 5, 6};
};

/// Throws InvalidArgument (bad p, q, m, or q | p+2) and ConfigInfeasible.
void validate_config(const PipelineConfig& cfg);

struct SchreierGraph {
  std::vector<BinaryWord> vertices;
  /// edges[g][v] is the index of g(vertices[v]), or -1 outside a ball.
  std::vector<std::vector<std::int64_t>> edges;
  bool edge_regular() const;
};

/// Full orbit of w (padded with zeros to the generators' resolution).
/// Throws OrbitTooLarge.
SchreierGraph schreier_orbit(const std::vector<PrefixExchange>& gens, const BinaryWord& w,
                             std::size_t max_vertices = 1u << 20);
/// Ball of the given radius around w under gens and their inverses.
SchreierGraph schreier_ball(const std::vector<PrefixExchange>& gens, const BinaryWord& w, int radius);

struct FolnerReport {
  std::size_t size = 0;
  /// |gF symmetric-difference F| / |F| per generator.
  std::vector<Rational> ratios;
  bool flagged = false;
};

/// Flags a candidate when its largest ratio is <= 2/|F| + bound.
std::vector<FolnerReport> folner_witness(const SchreierGraph& g, const std::vector<std::vector<std::size_t>>& candidates,
                                         const Rational& bound = Rational(0));

/// Vertices T^i(center) for |i| <= n, following generator t in the graph;
/// empty if the path leaves the graph.
std::vector<std::size_t> t_interval(const SchreierGraph& g, std::size_t t, std::size_t center, int n);

struct StabilizerSignature {
  BinaryWord basepoint;
  std::vector<FreeWord> words;
};

/// Reduced words of length <= r fixing w (padded to the generators' resolution).
StabilizerSignature stabilizer_signature(const std::vector<PrefixExchange>& gens, const BinaryWord& w, int r);

struct AmenabilityWitness {
  int n = 0;
  BinaryWord basepoint;
  std::size_t path_length = 0;
  bool loops_elsewhere = false;
  Rational t_ratio;
  Rational expected;
  bool ok = false;
};

struct PipelineResult {
  PipelineConfig cfg;
  Rational c;
  DyadicRational epsilon;
  GeneratorPlan plan;
  AssembleResult u;
  std::vector<DyadicSet> reservoirs;
  std::vector<DyadicSet> reservoir_tower;
  std::vector<DyadicSet> reservoir_free;
  DyadicSet region;
  std::vector<DyadicSet> excluded;
  DyadicSet budget_set;
  Rational budget_limit;
  bool budget_ok = false;
  std::vector<DyadicSet> D;
  std::vector<PrePCycle> cycles;
  std::vector<PrefixExchange> C;
  TowerResult tower;
  std::vector<PrefixExchange> generators;

  bool supports_disjoint = false;
  bool orders_ok = false;
  std::vector<std::string> order_notes;
  bool recovery_ok = false;
  std::vector<DyadicRational> recovery_distances;
  HFCheck hf;
  std::vector<AmenabilityWitness> amenability;
  bool amenability_ok = false;
  StabilizerSignature stab_free;
  StabilizerSignature stab_tower;
  bool signatures_distinct = false;

  /// Every certificate, including ledger and support-size bound.
  bool all_ok() const;
  std::vector<std::string> failures() const;
};

PipelineResult run_pipeline(const PipelineConfig& cfg);

}  // namespace cantor
