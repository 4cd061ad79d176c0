#include "cantor/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

#include "cantor/assembly.hpp"
#include "cantor/commuting.hpp"
#include "cantor/error.hpp"
#include "cantor/json_io.hpp"
#include "cantor/rf_actions.hpp"
#include "cantor/selftest.hpp"
#include "cantor/transform.hpp"

namespace cantor {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Report {
  Json cert;
  std::vector<std::string> failures;
  std::string csv;
  std::string dot;
  /// Plain text for the default selftest view.
  std::string text;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string report;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ConfigInfeasible:
    case ErrorCode::LevelTooSmall:
    case ErrorCode::KappaUnavailable:
    case ErrorCode::TooLarge:
    case ErrorCode::NoPlanEntry:
      return true;
    default:
      return false;
  }
}

DyadicRational parse_dyadic(const std::string& text) {
  Rational x = Rational::parse(text);
  DyadicRational d = DyadicRational::floor_at(x, 40);
  if (!(Rational(d) == x)) throw Error(ErrorCode::InvalidArgument, "epsilon must be a dyadic rational: " + text);
  return d;
}

std::vector<std::uint64_t> parse_bases(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad base list: " + text);
    }
  }
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

std::filesystem::path report_path(const std::string& report) {
  std::filesystem::path p(report);
  const char* dir = std::getenv("CANTOR_REPORT_DIR");
  if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

// density

struct DensityArgs {
  std::string epsilon = "1/2";
  int factors = 2;
  int level = 14;
  int all_targets = 2;
  int n = 2;
};

Report density_plan(const DensityArgs& a) {
  GeneratorPlan plan = plan_sequences(parse_dyadic(a.epsilon), a.factors, a.level);
  Report r;
  r.cert = Json{{"plan", to_json(plan)}};
  r.csv = csv_line({"k", "n_k", "delta_k", "eps_k", "kappa"});
  for (std::size_t k = 0; k < plan.n_seq.size(); ++k) {
    r.csv += csv_line({std::to_string(k), std::to_string(plan.n_seq[k]), plan.delta_seq[k].str(),
                       plan.eps_seq[k].str(), std::to_string(plan.kappa_table.at(plan.n_seq[k]))});
  }
  return r;
}

Report density_assemble(const DensityArgs& a) {
  GeneratorPlan plan = plan_sequences(parse_dyadic(a.epsilon), a.factors, a.level);
  AssembleResult u = assemble_U(plan, std::vector<DyadicSet>(static_cast<std::size_t>(plan.K)));
  Report r;
  r.cert = Json{{"plan", to_json(plan)}, {"U", to_json(u)}, {"U_pairs", to_json(u.U)}};
  r.csv = csv_line({"k", "n_k", "distance", "slack", "bound", "pass"});
  for (const auto& e : u.ledger) {
    r.csv += csv_line({std::to_string(e.k), std::to_string(e.n_k), e.distance.str(), e.slack.str(), e.bound.str(),
                       e.pass ? "true" : "false"});
    if (!e.pass) r.failures.push_back("error ledger at k=" + std::to_string(e.k));
  }
  if (!u.support_ok) r.failures.push_back("support of U not below epsilon");
  return r;
}

Report density_synthesize(const DensityArgs& a) {
  GeneratorPlan plan = plan_sequences(parse_dyadic(a.epsilon), a.factors, a.level);
  AssembleResult u = assemble_U(plan, std::vector<DyadicSet>(static_cast<std::size_t>(plan.K)));
  auto it = std::find(plan.n_seq.begin(), plan.n_seq.end(), a.all_targets);
  if (it == plan.n_seq.end()) {
    throw Error(ErrorCode::NoPlanEntry, "no factor with n_k = " + std::to_string(a.all_targets));
  }
  int k = static_cast<int>(it - plan.n_seq.begin());
  SynthesisSweep sweep = synthesize_all(plan, u.U, k);
  Report r;
  r.cert = Json{{"plan", to_json(plan)},
                {"k", k},
                {"n_k", a.all_targets},
                {"targets", sweep.targets},
                {"within", sweep.within},
                {"max_error", sweep.max_error.str()},
                {"allowance", sweep.allowance.str()}};
  r.csv = csv_line({"target", "word", "error", "allowance", "within"});
  if (a.all_targets <= 2) {
    std::vector<std::uint32_t> perm(std::size_t{1} << a.all_targets);
    std::iota(perm.begin(), perm.end(), 0u);
    Json rows = Json::array();
    do {
      PrefixExchange target = PrefixExchange::from_level_images(a.all_targets, perm);
      SynthesisResult s = synthesize_word(target, plan, u.U, k);
      rows.push_back(Json{{"target", target.str()}, {"word", s.word_text()}, {"error", s.error.str()}, {"within", s.within}});
      r.csv += csv_line({"\"" + target.str() + "\"", "\"" + s.word_text() + "\"", s.error.str(), s.allowance.str(),
                         s.within ? "true" : "false"});
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.cert["rows"] = rows;
  }
  if (sweep.within != sweep.targets) {
    r.failures.push_back("synthesis: " + std::to_string(sweep.targets - sweep.within) + " targets outside allowance");
  }
  return r;
}

Report density_kappa(const DensityArgs& a) {
  const KappaResult& k = kappa_bfs(a.n);
  Report r;
  r.cert = Json{{"n", k.n}, {"kappa", k.kappa}, {"reached", k.reached}, {"generation", generation_check(a.n)}};
  r.csv = csv_line({"n", "kappa", "reached"}) +
          csv_line({std::to_string(k.n), std::to_string(k.kappa), std::to_string(k.reached)});
  if (!generation_check(a.n)) r.failures.push_back("generation");
  return r;
}

// commuting

Report commuting_demo(const std::string& bases_text, int level, std::uint64_t seed) {
  std::vector<std::uint64_t> bases = parse_bases(bases_text);
  SeededRng rng(seed);
  std::vector<FactorSpec> factors = random_commuting_factors(rng, bases, level);
  std::vector<Recovery> rec = reconstruct_all(factors);
  Report r;
  Json rows = Json::array();
  r.csv = csv_line({"base", "pairs", "exponent", "distance"});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    rows.push_back(Json{{"base", factors[i].base},
                        {"factor", to_json(factors[i].map)},
                        {"exponent", rec[i].exponent},
                        {"distance", rec[i].distance.str()},
                        {"exact", rec[i].map == factors[i].map}});
    r.csv += csv_line({std::to_string(factors[i].base), std::to_string(factors[i].map.pairs().size()),
                       std::to_string(rec[i].exponent), rec[i].distance.str()});
    if (!rec[i].distance.is_zero()) r.failures.push_back("recovery of factor " + std::to_string(i));
  }
  r.cert = Json{{"level", level}, {"seed", seed}, {"factors", rows}};
  return r;
}

// rf

Report rf_check(int q, int m, int maxword, int maxdepth) {
  if (q < 2 || m < 1 || maxword < 1 || maxdepth < 1) throw Error(ErrorCode::InvalidArgument, "bad rf parameters");
  Report r;
  Json words = Json::array();
  std::uint64_t missed = 0;
  r.csv = csv_line({"word", "depth"});
  for (const FreeWord& w : enumerate_reduced(m, maxword)) {
    int d = freeness_depth(w, q, m, maxdepth);
    missed += d < 0;
    words.push_back(Json::array({w.str(), d}));
    r.csv += csv_line({"\"" + w.str() + "\"", std::to_string(d)});
  }
  Json actions = Json::array();
  for (int d = 1; d <= maxdepth; ++d) {
    try {
      PointedFiniteAction a = series_action(q, m, d);
      Json gens = Json::array();
      for (std::size_t i = 0; i < a.gens.size(); ++i) {
        std::uint64_t ord = perm_order(a.gens[i]);
        if (!is_power_of(ord, static_cast<std::uint64_t>(q))) {
          r.failures.push_back("generator order at depth " + std::to_string(d));
        }
        gens.push_back(Json{{"table", a.gens[i]}, {"order", ord}});
      }
      actions.push_back(Json{{"depth", d}, {"carrier", a.size()}, {"basepoint", a.basepoint}, {"generators", gens}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CarrierTooLarge) throw;
      actions.push_back(Json{{"depth", d}, {"skipped", e.what()}});
    }
  }
  if (missed) r.failures.push_back(std::to_string(missed) + " words trivial at every depth");
  r.cert = Json{{"q", q}, {"m", m}, {"maxword", maxword}, {"maxdepth", maxdepth}, {"words", words}, {"actions", actions}};
  return r;
}

// faithful

std::vector<DyadicSet> tower_regions(int depth, int level) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be >= 0");
  auto span = static_cast<std::uint64_t>((depth + 1) * (depth + 1) + depth + 1);
  if (level < 1 || level > 40 || span >= (std::uint64_t{1} << level)) {
    throw Error(ErrorCode::InvalidArgument, "level too small for the requested depth");
  }
  std::vector<DyadicSet> out;
  for (int n = 0; n <= depth; ++n) {
    out.push_back(DyadicSet::cylinder(odometer_word(static_cast<std::uint64_t>((n + 1) * (n + 1)), level)));
  }
  return out;
}

TranslateSets interval_sets(const PrefixExchange& t, int depth) {
  TranslateSets F;
  for (int n = 0; n <= depth; ++n) {
    std::vector<PrefixExchange> fn;
    for (int i = -n; i <= n; ++i) fn.push_back(power(t, i));
    F.push_back(fn);
  }
  return F;
}

Report faithful_tower(int depth, int q, int m, int level) {
  OdometerHandle T{level};
  TowerConfig cfg;
  cfg.q = q;
  cfg.m = m;
  TowerResult tower = build_tower(T, tower_regions(depth, level), cfg);
  Report r;
  r.cert = to_json(tower, true);
  r.csv = csv_line({"n", "action_depth", "k_m", "H", "epsilon", "families", "witnesses_disjoint"});
  for (const auto& l : tower.levels) {
    r.csv += csv_line({std::to_string(l.n), std::to_string(l.action_depth), std::to_string(l.k_m),
                       std::to_string(l.h_count), l.epsilon.str(), std::to_string(l.families),
                       l.witnesses_disjoint ? "true" : "false"});
    if (!l.witnesses_disjoint) r.failures.push_back("witnesses at level " + std::to_string(l.n));
  }
  if (!tower.support_ok) r.failures.push_back("generator support outside carrier");
  return r;
}

Report faithful_quarter(int depth, int level) {
  PrefixExchange t = finite_odometer(level);
  TranslateSets F = interval_sets(t, depth);
  TranslateFamily fam = quarter_shrink(enforce_quarter(tower_regions(depth, level), F), F);
  Report r;
  r.cert = to_json(fam);
  r.csv = csv_line({"n", "measure", "cylinders"});
  for (std::size_t n = 0; n < fam.A_seq.size(); ++n) {
    r.csv += csv_line({std::to_string(n), fam.A_seq[n].measure().str(), std::to_string(fam.A_seq[n].size())});
  }
  if (!fam.disjoint) r.failures.push_back("translates overlap");
  return r;
}

Report faithful_hf(int depth, int q, int m, int level, int radius) {
  OdometerHandle T{level};
  TowerConfig cfg;
  cfg.q = q;
  cfg.m = m;
  TowerResult tower = build_tower(T, tower_regions(depth, level), cfg);
  std::vector<PrefixExchange> gens{odometer(T)};
  gens.insert(gens.end(), tower.generators.begin(), tower.generators.end());
  HFCheck h = hf_check(gens, radius, level);
  Report r;
  r.cert = to_json(h);
  r.csv = csv_line({"radius", "words", "moving_measure", "ok"}) +
          csv_line({std::to_string(h.radius), std::to_string(h.words), h.moving.measure().str(), h.ok ? "true" : "false"});
  if (!h.ok) r.failures.push_back("word " + h.failing_word + " has no common moving point");
  return r;
}

// assembly

struct AssemblyArgs {
  PipelineConfig cfg;
  std::string graphing;
  std::string word;
  int radius = 3;
  int n = 2;
};

PipelineConfig load_config(AssemblyArgs a) {
  if (!a.graphing.empty()) {
    std::ifstream in(a.graphing);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read graphing file " + a.graphing);
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("graphing file: ") + e.what());
    }
    a.cfg.phi = graphing_from_json(j);
  }
  return a.cfg;
}

std::string ledger_csv(const PipelineResult& p) {
  std::string s = csv_line({"table", "index", "value", "bound", "pass"});
  for (const auto& e : p.u.ledger) {
    s += csv_line({"ledger", std::to_string(e.k), e.distance.str(), e.bound.str(), e.pass ? "true" : "false"});
  }
  for (const auto& a : p.amenability) {
    s += csv_line({"t_ratio", std::to_string(a.n), a.t_ratio.str(), a.expected.str(), a.ok ? "true" : "false"});
  }
  return s;
}

std::string schreier_dot(const SchreierGraph& g) {
  static const char* colors[] = {"black", "red", "blue", "darkgreen", "orange", "purple"};
  std::string s = "digraph schreier {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    s += "  v" + std::to_string(v) + " [label=\"" + g.vertices[v].str() + "\"];\n";
  }
  for (std::size_t gi = 0; gi < g.edges.size(); ++gi) {
    for (std::size_t v = 0; v < g.edges[gi].size(); ++v) {
      if (g.edges[gi][v] < 0) continue;
      s += "  v" + std::to_string(v) + " -> v" + std::to_string(g.edges[gi][v]) + " [label=\"g" +
           std::to_string(gi) + "\", color=" + colors[gi % 6] + "];\n";
    }
  }
  return s + "}\n";
}

BinaryWord basepoint(const AssemblyArgs& a, const PipelineResult& p) {
  if (!a.word.empty()) return BinaryWord::parse(a.word);
  return p.reservoir_free.front().words().front();
}

Report assembly_run(const AssemblyArgs& a) {
  PipelineResult p = run_pipeline(load_config(a));
  Report r;
  r.cert = to_json(p);
  r.failures = p.failures();
  r.csv = ledger_csv(p);
  r.dot = schreier_dot(schreier_ball(p.generators, basepoint(a, p), a.radius));
  return r;
}

Report assembly_schreier(const AssemblyArgs& a) {
  PipelineResult p = run_pipeline(load_config(a));
  SchreierGraph g = schreier_ball(p.generators, basepoint(a, p), a.radius);
  Report r;
  r.cert = to_json(g);
  r.dot = schreier_dot(g);
  r.csv = csv_line({"vertex", "word"});
  for (std::size_t v = 0; v < g.vertices.size(); ++v) r.csv += csv_line({std::to_string(v), g.vertices[v].str()});
  return r;
}

Report assembly_folner(const AssemblyArgs& a) {
  PipelineResult p = run_pipeline(load_config(a));
  SchreierGraph g = schreier_ball(p.generators, basepoint(a, p), a.n);
  std::vector<std::size_t> path = t_interval(g, 0, 0, a.n);
  Report r;
  if (path.empty()) {
    r.failures.push_back("no T-interval of length " + std::to_string(2 * a.n + 1) + " through the basepoint");
    r.cert = Json{{"n", a.n}, {"interval", Json::array()}};
    return r;
  }
  FolnerReport f = folner_witness(g, {path}).front();
  Json ratios = Json::array();
  r.csv = csv_line({"generator", "ratio"});
  for (std::size_t i = 0; i < f.ratios.size(); ++i) {
    ratios.push_back(f.ratios[i].str());
    r.csv += csv_line({std::to_string(i), f.ratios[i].str()});
  }
  Json verts = Json::array();
  for (std::size_t v : path) verts.push_back(g.vertices[v].str());
  r.cert = Json{{"n", a.n}, {"interval", verts}, {"ratios", ratios}, {"flagged", f.flagged},
                {"expected_t_ratio", Rational(2, 2 * a.n + 1).str()}};
  r.dot = schreier_dot(g);
  if (!f.flagged) r.failures.push_back("interval not flagged as a Folner candidate");
  return r;
}

Report assembly_stab(const AssemblyArgs& a) {
  PipelineResult p = run_pipeline(load_config(a));
  StabilizerSignature s = stabilizer_signature(p.generators, basepoint(a, p), a.radius);
  Report r;
  r.cert = to_json(s);
  r.csv = csv_line({"word"});
  for (const auto& w : s.words) r.csv += csv_line({"\"" + w.str() + "\""});
  return r;
}

// selftest

Report selftest(const Globals& g, bool quick, int criterion) {
  std::optional<int> only;
  if (criterion > 0) only = criterion;
  std::vector<CriterionResult> res = run_acceptance(g.seed, quick, only);
  Report r;
  r.cert = acceptance_certificate(g.seed, quick, res);
  r.csv = csv_line({"id", "name", "pass", "seconds", "limit"});
  for (const auto& c : res) {
    char line[96];
    std::snprintf(line, sizeof line, "%-4s %2d  %-26s %8.3fs  ", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                  c.seconds);
    r.text += line + c.detail + "\n";
    r.csv += csv_line({std::to_string(c.id), "\"" + c.name + "\"", c.pass ? "true" : "false",
                       std::to_string(c.seconds), std::to_string(c.limit_seconds)});
    if (!c.pass) r.failures.push_back("criterion " + std::to_string(c.id) + " (" + c.name + ")");
  }
  return r;
}

int emit(const Report& r, const Globals& g, const std::string& command, const Json& config, double seconds,
         const std::string& default_format) {
  std::string format = g.format.empty() ? default_format : g.format;
  std::string body;
  if (format == "json") {
    body = r.cert.dump(2) + "\n";
  } else if (format == "csv") {
    if (r.csv.empty()) throw UsageError("csv output not available for this command");
    body = r.csv;
  } else if (format == "dot") {
    if (r.dot.empty()) throw UsageError("dot output not available for this command");
    body = r.dot;
  } else {
    body = r.text;
  }
  std::cout << body;
  if (!g.report.empty()) {
    std::filesystem::path path = report_path(g.report);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << body;
    Json manifest{{"command", command},
                  {"config", config},
                  {"version", kVersion},
                  {"seed", g.seed},
                  {"seconds", seconds},
                  {"digests", Json{{"certificate", digest(r.cert)}, {"report", digest(body)}}}};
    std::filesystem::path mpath = path;
    mpath += ".manifest.json";
    std::ofstream(mpath) << manifest.dump(2) << "\n";
  }
  for (const auto& f : r.failures) std::cerr << "certificate failed: " << f << "\n";
  return r.failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact dyadic constructions on the Cantor space"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->default_val(1);
  app.add_option("--report", g.report, "report file (relative paths resolve in $CANTOR_REPORT_DIR)");
  app.add_option("--format", g.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));

  std::string command;
  Json config;
  std::function<Report()> action;
  std::string default_format = "json";
  auto fallthrough = [](CLI::App* s) { s->fallthrough(); };

  DensityArgs da;
  auto* density = app.add_subcommand("density", "plans, assembly of U, word synthesis");
  fallthrough(density);
  density->require_subcommand(1);
  auto density_flags = [&](CLI::App* s) {
    fallthrough(s);
    s->add_option("--epsilon", da.epsilon, "dyadic epsilon")->capture_default_str();
    s->add_option("--factors", da.factors, "number of factors K")->capture_default_str();
    s->add_option("--level", da.level, "odometer level L")->capture_default_str();
  };
  auto* dplan = density->add_subcommand("plan", "greedy n_k, delta_k, eps_k");
  density_flags(dplan);
  dplan->callback([&] {
    command = "density plan";
    config = Json{{"epsilon", da.epsilon}, {"factors", da.factors}, {"level", da.level}};
    action = [&] { return density_plan(da); };
  });
  auto* dassemble = density->add_subcommand("assemble", "product U and its error ledger");
  density_flags(dassemble);
  dassemble->callback([&] {
    command = "density assemble";
    config = Json{{"epsilon", da.epsilon}, {"factors", da.factors}, {"level", da.level}};
    action = [&] { return density_assemble(da); };
  });
  auto* dsynth = density->add_subcommand("synthesize", "words for every level-n permutation");
  density_flags(dsynth);
  dsynth->add_option("--all-targets", da.all_targets, "level n_k of the targets")->capture_default_str();
  dsynth->callback([&] {
    command = "density synthesize";
    config = Json{{"epsilon", da.epsilon}, {"factors", da.factors}, {"level", da.level}, {"all_targets", da.all_targets}};
    action = [&] { return density_synthesize(da); };
  });
  auto* dkappa = density->add_subcommand("kappa", "Cayley-graph eccentricity for n = 2, 3");
  fallthrough(dkappa);
  dkappa->add_option("--n", da.n, "level")->capture_default_str();
  dkappa->callback([&] {
    command = "density kappa";
    config = Json{{"n", da.n}};
    action = [&] { return density_kappa(da); };
  });

  std::string bases = "2,3,5";
  int clevel = 8;
  auto* commuting = app.add_subcommand("commuting", "recovery of commuting factors");
  fallthrough(commuting);
  commuting->require_subcommand(1);
  auto* cdemo = commuting->add_subcommand("demo", "random factors with coprime bases");
  fallthrough(cdemo);
  cdemo->add_option("--bases", bases, "comma-separated bases")->capture_default_str();
  cdemo->add_option("--level", clevel, "level")->capture_default_str();
  cdemo->callback([&] {
    command = "commuting demo";
    config = Json{{"bases", bases}, {"level", clevel}};
    action = [&] { return commuting_demo(bases, clevel, g.seed); };
  });

  int rq = 3, rm = 2, maxword = 6, maxdepth = 6;
  auto* rf = app.add_subcommand("rf", "residually finite actions");
  fallthrough(rf);
  rf->require_subcommand(1);
  auto* rcheck = rf->add_subcommand("check-freeness", "detect every short word in a truncated series quotient");
  fallthrough(rcheck);
  rcheck->add_option("--q", rq, "prime")->capture_default_str();
  rcheck->add_option("--m", rm, "generators")->capture_default_str();
  rcheck->add_option("--maxword", maxword, "word length")->capture_default_str();
  rcheck->add_option("--maxdepth", maxdepth, "truncation degree")->capture_default_str();
  rcheck->callback([&] {
    command = "rf check-freeness";
    config = Json{{"q", rq}, {"m", rm}, {"maxword", maxword}, {"maxdepth", maxdepth}};
    action = [&] { return rf_check(rq, rm, maxword, maxdepth); };
  });

  int fdepth = 2, fq = 3, fm = 1, flevel = 14, fradius = 2;
  auto* faithful = app.add_subcommand("faithful", "translate families, towers, faithfulness");
  fallthrough(faithful);
  faithful->require_subcommand(1);
  auto faithful_flags = [&](CLI::App* s) {
    fallthrough(s);
    s->add_option("--depth", fdepth, "largest n")->capture_default_str();
    s->add_option("--level", flevel, "odometer level L")->capture_default_str();
  };
  auto* ftower = faithful->add_subcommand("tower", "embedded actions with witness sets");
  faithful_flags(ftower);
  ftower->add_option("--q", fq, "prime")->capture_default_str();
  ftower->add_option("--m", fm, "generators")->capture_default_str();
  ftower->callback([&] {
    command = "faithful tower";
    config = Json{{"depth", fdepth}, {"q", fq}, {"m", fm}, {"level", flevel}};
    action = [&] { return faithful_tower(fdepth, fq, fm, flevel); };
  });
  auto* fquarter = faithful->add_subcommand("quarter", "disjoint translate family from interval word sets");
  faithful_flags(fquarter);
  fquarter->callback([&] {
    command = "faithful quarter";
    config = Json{{"depth", fdepth}, {"level", flevel}};
    action = [&] { return faithful_quarter(fdepth, flevel); };
  });
  auto* fhf = faithful->add_subcommand("hf", "common moving set for short words");
  faithful_flags(fhf);
  fhf->add_option("--q", fq, "prime")->capture_default_str();
  fhf->add_option("--m", fm, "generators")->capture_default_str();
  fhf->add_option("--radius", fradius, "word length")->capture_default_str();
  fhf->callback([&] {
    command = "faithful hf";
    config = Json{{"depth", fdepth}, {"q", fq}, {"m", fm}, {"level", flevel}, {"radius", fradius}};
    action = [&] { return faithful_hf(fdepth, fq, fm, flevel, fradius); };
  });

  AssemblyArgs aa;
  auto* assembly = app.add_subcommand("assembly", "end-to-end generators and certificates");
  fallthrough(assembly);
  assembly->require_subcommand(1);
  auto assembly_flags = [&](CLI::App* s) {
    fallthrough(s);
    s->add_option("--m", aa.cfg.m, "number of graphing pieces")->capture_default_str();
    s->add_option("--p", aa.cfg.p, "cycle parameter")->capture_default_str();
    s->add_option("--q", aa.cfg.q, "prime for the residually finite part")->capture_default_str();
    s->add_option("--level", aa.cfg.L, "odometer level L")->capture_default_str();
    s->add_option("--factors", aa.cfg.K, "number of factors K")->capture_default_str();
    s->add_option("--tower-depth", aa.cfg.tower_depth, "largest reservoir index")->capture_default_str();
    s->add_option("--hf-radius", aa.cfg.hf_radius, "faithfulness word length")->capture_default_str();
    s->add_option("--stab-radius", aa.cfg.stab_radius, "stabilizer word length")->capture_default_str();
    s->add_option("--graphing", aa.graphing, "JSON file: array of members, each an array of [src, dst]");
  };
  auto assembly_config = [&] {
    return Json{{"m", aa.cfg.m},
                {"p", aa.cfg.p},
                {"q", aa.cfg.q},
                {"level", aa.cfg.L},
                {"factors", aa.cfg.K},
                {"tower_depth", aa.cfg.tower_depth},
                {"hf_radius", aa.cfg.hf_radius},
                {"stab_radius", aa.cfg.stab_radius},
                {"graphing", aa.graphing},
                {"word", aa.word},
                {"radius", aa.radius},
                {"n", aa.n}};
  };
  auto* arun = assembly->add_subcommand("run", "full pipeline and master certificate");
  assembly_flags(arun);
  arun->callback([&] {
    command = "assembly run";
    config = assembly_config();
    action = [&] { return assembly_run(aa); };
  });
  auto* aschreier = assembly->add_subcommand("schreier", "Schreier ball around a point");
  assembly_flags(aschreier);
  aschreier->add_option("--word", aa.word, "basepoint word (default: free reservoir)");
  aschreier->add_option("--radius", aa.radius, "ball radius")->capture_default_str();
  aschreier->callback([&] {
    command = "assembly schreier";
    config = assembly_config();
    action = [&] { return assembly_schreier(aa); };
  });
  auto* afolner = assembly->add_subcommand("folner", "T-interval Folner ratios");
  assembly_flags(afolner);
  afolner->add_option("--word", aa.word, "center word (default: free reservoir)");
  afolner->add_option("--n", aa.n, "interval half-length")->capture_default_str();
  afolner->callback([&] {
    command = "assembly folner";
    config = assembly_config();
    action = [&] { return assembly_folner(aa); };
  });
  auto* astab = assembly->add_subcommand("stab", "stabilizer signature of a point");
  assembly_flags(astab);
  astab->add_option("--word", aa.word, "basepoint word (default: free reservoir)");
  astab->add_option("--radius", aa.radius, "word length")->default_val(4);
  astab->callback([&] {
    command = "assembly stab";
    config = assembly_config();
    action = [&] { return assembly_stab(aa); };
  });

  bool quick = false;
  int criterion = 0;
  auto* st = app.add_subcommand("selftest", "acceptance suite");
  fallthrough(st);
  st->add_flag("--quick", quick, "smaller random samples");
  st->add_option("--criterion", criterion, "run a single criterion (1-10)")->check(CLI::Range(0, 10));
  st->callback([&] {
    command = "selftest";
    config = Json{{"quick", quick}, {"criterion", criterion}};
    default_format = "text";
    action = [&] { return selftest(g, quick, criterion); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    auto start = std::chrono::steady_clock::now();
    Report r = action();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(r, g, command, config, seconds, default_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_code(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cantor
