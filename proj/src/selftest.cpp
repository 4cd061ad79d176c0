#include "cantor/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cantor/assembly.hpp"
#include "cantor/commuting.hpp"
#include "cantor/density.hpp"
#include "cantor/error.hpp"
#include "cantor/faithful.hpp"
#include "cantor/graphing.hpp"
#include "cantor/rf_actions.hpp"
#include "cantor/transform.hpp"

namespace cantor {

namespace {

using kernels::Perm;

struct Outcome {
  bool pass = false;
  std::string detail;
  Json data = Json::object();
};

// Oracles below work on dense tables built point by point, never on the
// prefix-pair machinery they check.

Perm dense(const PrefixExchange& t, int level) {
  Perm out(std::size_t{1} << level);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(t.apply(BinaryWord::from_index(i, level)).index());
  }
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm dense_power(Perm a, std::uint64_t e) {
  Perm r = identity_perm(a.size());
  while (e) {
    if (e & 1) r = kernels::serial::compose(a, r);
    e >>= 1;
    if (e) a = kernels::serial::compose(a, a);
  }
  return r;
}

std::uint64_t dense_order(const Perm& a) {
  std::uint64_t o = 1;
  for (auto len : kernels::serial::orbit_lengths(a)) o = std::lcm(o, std::uint64_t{len});
  return o;
}

std::uint64_t moved(const Perm& a) {
  std::uint64_t c = 0;
  for (std::uint32_t i = 0; i < a.size(); ++i) c += a[i] != i;
  return c;
}

DyadicRational dense_distance(const Perm& a, const Perm& b, int level) {
  return DyadicRational(static_cast<std::int64_t>(kernels::serial::disagreement(a, b)), level);
}

BinaryWord pad(const BinaryWord& w, int len) {
  return w.length() >= len ? w : w.concat(BinaryWord::repeat(false, len - w.length()));
}

bool is_pow(std::uint64_t n, std::uint64_t b) {
  while (n > 1 && n % b == 0) n /= b;
  return n == 1;
}

// Disjointness by measure: the union has the summed measure.
bool measure_disjoint(const std::vector<DyadicSet>& sets) {
  DyadicSet all;
  DyadicRational sum;
  for (const auto& s : sets) {
    all = all.unite(s);
    sum += s.measure();
  }
  return all.measure() == sum;
}

Outcome support_identity() {
  Outcome o;
  o.pass = true;
  Json rows = Json::array();
  for (int n = 2; n <= 8; ++n) {
    PrefixExchange u = transposition_U(n);
    DyadicRational lib = u.support().measure();
    DyadicRational oracle(static_cast<std::int64_t>(moved(dense(u, n))), n);
    DyadicRational expected = DyadicRational::pow2(n - 1);
    bool ok = lib == expected && oracle == expected;
    o.pass = o.pass && ok;
    rows.push_back(Json{{"n", n}, {"measure", lib.str()}, {"dense", oracle.str()}, {"ok", ok}});
  }
  o.data["rows"] = rows;
  o.detail = "n=2..8 support measure equals 2^(1-n)";
  return o;
}

Outcome root_laws(SeededRng& rng, bool quick) {
  Outcome o;
  int perms = quick ? 20 : 200;
  int invols = quick ? 10 : 50;
  std::uint64_t checks = 0, failures = 0, involution_checks = 0;
  for (int q = 1; q <= 4; ++q) {
    std::size_t points = std::size_t{1} << q;
    for (int s = 0; s < perms + invols; ++s) {
      Perm img = identity_perm(points);
      if (s < perms) {
        rng.shuffle(img);
      } else {
        Perm order = identity_perm(points);
        rng.shuffle(order);
        std::uint64_t swaps = 1 + rng.below(points / 2);
        for (std::uint64_t j = 0; j < swaps; ++j) std::swap(img[order[2 * j]], img[order[2 * j + 1]]);
      }
      PrefixExchange u = PrefixExchange::from_level_images(q, img);
      bool involution = !u.is_identity() && compose(u, u).is_identity();
      for (int p = 0; p <= 4; ++p) {
        PrefixExchange r = root_2p(u, p);
        std::uint64_t k = std::uint64_t{1} << p;
        bool ok = power(r, static_cast<std::int64_t>(k)) == u && r.support() == u.support();
        int level = q + p;
        Perm dr = dense(r, level), du = dense(u, level);
        ok = ok && dense_power(dr, k) == du;
        for (std::uint32_t i = 0; i < dr.size(); ++i) ok = ok && ((dr[i] != i) == (du[i] != i));
        if (involution) {
          ++involution_checks;
          ok = ok && cycle_structure(r).order() == 2 * k && dense_order(dr) == 2 * k;
        }
        ++checks;
        failures += !ok;
      }
    }
  }
  o.pass = failures == 0;
  o.data = Json{{"checks", checks}, {"involution_checks", involution_checks}, {"failures", failures}};
  o.detail = std::to_string(checks) + " roots, " + std::to_string(involution_checks) + " involution orders, " +
             std::to_string(failures) + " failures";
  return o;
}

std::uint64_t dense_closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity_perm(gens[0].size())};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = kernels::serial::compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Outcome generation() {
  Outcome o;
  o.pass = true;
  Json rows = Json::array();
  for (int n : {2, 3}) {
    std::vector<PrefixExchange> gens{finite_odometer(n), transposition_U(n)};
    std::uint64_t lib = closure_size(n, gens);
    std::uint64_t oracle = dense_closure({dense(gens[0], n), dense(gens[1], n)});
    std::uint64_t full = kernels::factorial(1 << n);
    bool ok = lib == full && oracle == full && generation_check(n);
    o.pass = o.pass && ok;
    rows.push_back(Json{{"n", n}, {"closure", lib}, {"dense_closure", oracle}, {"expected", full}, {"ok", ok}});
  }
  o.data["rows"] = rows;
  o.detail = "closures 24 and 40320";
  return o;
}

// K=2 plan for epsilon 1/2 at level n_1 + 4.
GeneratorPlan acceptance_plan() {
  DyadicRational eps = DyadicRational::pow2(1);
  GeneratorPlan probe = plan_sequences(eps, 2, 14);
  return plan_sequences(eps, 2, probe.n_seq[1] + 4);
}

Outcome kappa_ledger() {
  Outcome o;
  GeneratorPlan plan = acceptance_plan();
  AssembleResult a = assemble_U(plan, std::vector<DyadicSet>(2));
  int level = std::max(plan.L, a.U.resolution());
  Perm du = dense(a.U, level);
  bool ok = true;
  Json rows = Json::array();
  for (int k = 0; k < plan.K; ++k) {
    auto ks = static_cast<std::size_t>(k);
    int n = plan.n_seq[ks];
    Perm uk = dense_power(du, std::uint64_t{1} << k);
    DyadicRational dist_b = dense_distance(uk, dense(transposition_U(n), level), level);
    DyadicRational dist_a = dense_distance(uk, dense(induced(transposition_U(n), a.kept[ks]), level), level);
    DyadicRational tail;
    for (std::size_t l = ks + 1; l < plan.n_seq.size(); ++l) tail += DyadicRational::pow2(plan.n_seq[l] - 1);
    Rational bound = Rational(plan.eps_seq[ks]) / Rational(static_cast<std::int64_t>(kappa_bfs(n).kappa));
    DyadicRational slack = DyadicRational::pow2(plan.L);
    bool a_ok = dist_a <= tail;
    bool b_ok = Rational(dist_b + slack) < bound;
    bool consistent = a.ledger[ks].distance == dist_b && a.ledger[ks].pass == b_ok;
    ok = ok && a_ok && b_ok && consistent;
    rows.push_back(Json{{"k", k},
                        {"n_k", n},
                        {"kappa", kappa_bfs(n).kappa},
                        {"distance_to_induced", dist_a.str()},
                        {"tail_bound", tail.str()},
                        {"induced_ok", a_ok},
                        {"distance", dist_b.str()},
                        {"slack", slack.str()},
                        {"bound", bound.str()},
                        {"ledger_ok", b_ok},
                        {"library_agrees", consistent}});
  }
  DyadicRational supp = DyadicRational(static_cast<std::int64_t>(moved(du)), level);
  bool supp_ok = supp < plan.epsilon && a.support_measure == supp;
  ok = ok && supp_ok;
  o.pass = ok;
  o.data = Json{{"level", plan.L},
                {"epsilon", plan.epsilon.str()},
                {"n_seq", plan.n_seq},
                {"ledger", rows},
                {"support_U", supp.str()},
                {"support_ok", supp_ok}};
  o.detail = "L=" + std::to_string(plan.L) + " n=(" + std::to_string(plan.n_seq[0]) + "," +
             std::to_string(plan.n_seq[1]) + ")";
  for (const auto& r : rows) {
    o.detail += "; k=" + std::to_string(r["k"].get<int>()) + " d=" + r["distance"].get<std::string>() +
                " vs " + r["bound"].get<std::string>() + (r["ledger_ok"].get<bool>() ? "" : " FAIL");
  }
  o.detail += "; supp U=" + supp.str() + (supp_ok ? "" : " not < eps");
  return o;
}

Outcome word_synthesis() {
  Outcome o;
  GeneratorPlan plan = acceptance_plan();
  AssembleResult a = assemble_U(plan, std::vector<DyadicSet>(2));
  if (plan.n_seq[0] != 2) {
    o.detail = "plan has n_0 != 2";
    return o;
  }
  int level = std::max(plan.L, a.U.resolution());
  PrefixExchange t = finite_odometer(plan.L);
  std::vector<Perm> letters{dense(t, level), dense(t.inverse(), level), dense(a.U, level)};
  Rational allowance = Rational(plan.eps_seq[0]) +
                       Rational(DyadicRational::pow2(plan.L) * static_cast<std::int64_t>(kappa_bfs(2).kappa));
  Perm perm = identity_perm(4);
  std::uint64_t within = 0, agree = 0, targets = 0;
  DyadicRational worst;
  Json rows = Json::array();
  do {
    PrefixExchange target = PrefixExchange::from_level_images(2, perm);
    SynthesisResult s = synthesize_word(target, plan, a.U, 0);
    Perm realized = identity_perm(std::size_t{1} << level);
    for (int g : s.word) realized = kernels::serial::compose(letters[static_cast<std::size_t>(g)], realized);
    DyadicRational err = dense_distance(realized, dense(target, level), level);
    bool ok = Rational(err) < allowance;
    within += ok;
    agree += err == s.error;
    worst = std::max(worst, err);
    ++targets;
    rows.push_back(Json{{"target", target.str()}, {"word", s.word_text()}, {"error", err.str()}, {"within", ok}});
  } while (std::next_permutation(perm.begin(), perm.end()));
  o.pass = within == targets && agree == targets;
  o.data = Json{{"level", plan.L}, {"allowance", allowance.str()}, {"targets", rows}, {"within", within}};
  o.detail = std::to_string(within) + "/" + std::to_string(targets) + " within " + allowance.str() +
             ", max error " + worst.str();
  return o;
}

Outcome commuting_reconstruction(SeededRng& rng, bool quick) {
  Outcome o;
  const int level = 8;
  const std::vector<std::uint64_t> bases{2, 3, 5};
  int triples = quick ? 20 : 100;
  std::uint64_t exact = 0, checked = 0;
  Json digests = Json::array();
  for (int t = 0; t < triples; ++t) {
    std::vector<FactorSpec> factors = random_commuting_factors(rng, bases, level);
    std::vector<Perm> tables;
    for (const auto& f : factors) tables.push_back(dense(f.map, level));
    std::vector<Recovery> rec = reconstruct_all(factors);
    Perm product = kernels::serial::compose(tables[0], kernels::serial::compose(tables[1], tables[2]));
    for (std::size_t k = 0; k < 3; ++k) {
      bool ok = rec[k].distance.is_zero() && rec[k].map == factors[k].map &&
                dense_power(product, rec[k].exponent) == tables[k];
      exact += ok;
      ++checked;
    }
    digests.push_back(digest(Json::array({to_json(factors[0].map), to_json(factors[1].map), to_json(factors[2].map)})));
  }
  o.pass = exact == checked;
  o.data = Json{{"triples", triples}, {"level", level}, {"exact", exact}, {"digests", digests}};
  o.detail = std::to_string(exact) + "/" + std::to_string(checked) + " factors recovered with d_u = 0";
  return o;
}

// Magnus image with sparse monomial maps, independent of the dense indexing.
using SparseSeries = std::map<std::vector<int>, int>;

SparseSeries sparse_times_letter(const SparseSeries& s, int letter, int q, int d) {
  int var = std::abs(letter);
  SparseSeries out;
  for (const auto& [mono, coef] : s) {
    int room = d - static_cast<int>(mono.size());
    std::vector<int> m = mono;
    for (int k = 0; k <= room; ++k) {
      int c = 0;
      if (letter > 0) {
        c = k <= 1 ? 1 : 0;
      } else {
        c = (k % 2 == 0) ? 1 : q - 1;
      }
      if (c) {
        int& slot = out[m];
        slot = (slot + coef * c) % q;
      }
      m.push_back(var);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Least degree of a nonzero non-constant monomial, or -1.
int sparse_depth(const FreeWord& w, int q, int d) {
  SparseSeries s{{{}, 1}};
  for (int l : w.letters) s = sparse_times_letter(s, l, q, d);
  int best = -1;
  for (const auto& [mono, coef] : s) {
    if (mono.empty()) continue;
    int deg = static_cast<int>(mono.size());
    if (best < 0 || deg < best) best = deg;
  }
  return best;
}

Outcome residual_finiteness() {
  Outcome o;
  const int q = 3, m = 2, d = 6;
  std::vector<FreeWord> words = enumerate_reduced(m, d);
  std::uint64_t expected_count = 0;
  for (int k = 1, c = 4; k <= d; ++k, c *= 3) expected_count += static_cast<std::uint64_t>(c);
  std::uint64_t detected = 0, agree = 0;
  std::map<int, std::uint64_t> by_depth;
  for (const auto& w : words) {
    int lib = freeness_depth(w, q, m, d);
    int oracle = sparse_depth(w, q, d);
    detected += lib >= 1;
    agree += lib == oracle;
    ++by_depth[lib];
  }
  Json orders = Json::array();
  bool orders_ok = true;
  int fitted = 0;
  for (int depth = 1; depth <= 6; ++depth) {
    try {
      PointedFiniteAction a = series_action(q, m, depth);
      ++fitted;
      for (std::size_t i = 0; i < a.gens.size(); ++i) {
        std::uint64_t lib = perm_order(a.gens[i]);
        std::uint64_t oracle = dense_order(a.gens[i]);
        bool ok = lib == oracle && is_pow(lib, 3) && dense_order(a.inv[i]) == lib;
        orders_ok = orders_ok && ok;
        orders.push_back(Json{{"depth", depth}, {"carrier", a.size()}, {"generator", i + 1}, {"order", lib}, {"ok", ok}});
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CarrierTooLarge) throw;
      orders.push_back(Json{{"depth", depth}, {"skipped", "carrier above bound"}});
    }
  }
  Json depths = Json::object();
  for (const auto& [k, v] : by_depth) depths[std::to_string(k)] = v;
  o.pass = words.size() == expected_count && detected == words.size() && agree == words.size() && orders_ok &&
           fitted >= 2;
  o.data = Json{{"words", words.size()}, {"detected", detected}, {"depths", depths}, {"orders", orders}};
  o.detail = std::to_string(detected) + "/" + std::to_string(words.size()) + " words detected at degree <= 6; " +
             std::to_string(fitted) + " carrier depths with 3-power orders";
  return o;
}

// Pushes a point through a product word, token by token, using pointwise apply.
BinaryWord apply_product(const ProductWord& h, const PrefixExchange& t, const PrefixExchange& t_inv,
                         const std::vector<PrefixExchange>& gens, const std::vector<PrefixExchange>& inv,
                         BinaryWord x) {
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    if (it->is_t) {
      for (int i = 0; i < std::abs(it->t_power); ++i) x = (it->t_power > 0 ? t : t_inv).apply(x);
    } else {
      const auto& ls = it->lambda.letters;
      for (auto l = ls.rbegin(); l != ls.rend(); ++l) {
        auto i = static_cast<std::size_t>(std::abs(*l) - 1);
        x = (*l > 0 ? gens[i] : inv[i]).apply(x);
      }
    }
  }
  return x;
}

bool pointwise_witnesses(const OdometerHandle& T, const std::vector<PrefixExchange>& gens, const TowerResult& tower) {
  PrefixExchange t = odometer(T);
  PrefixExchange t_inv = t.inverse();
  std::vector<PrefixExchange> inv;
  int res = T.level;
  for (const auto& g : gens) {
    inv.push_back(g.inverse());
    res = std::max(res, g.resolution());
  }
  for (const auto& lv : tower.levels) {
    if (lv.witness.empty()) return false;
    BinaryWord x = pad(lv.witness.words().front(), std::max(res, lv.witness.resolution()));
    for (std::size_t j = 0; j < lv.words.size(); ++j) {
      if (!lv.images[j].contains(apply_product(lv.words[j], t, t_inv, gens, inv, x))) return false;
    }
    if (!measure_disjoint(lv.images)) return false;
  }
  return true;
}

Outcome high_faithfulness() {
  Outcome o;
  const int L = 12;
  OdometerHandle T{L};
  PrefixExchange t = odometer(T);
  TranslateSets F;
  std::vector<DyadicSet> B;
  for (int n = 0; n <= 3; ++n) {
    std::vector<PrefixExchange> fn;
    for (int i = -n; i <= n; ++i) fn.push_back(power(t, i));
    F.push_back(fn);
    B.push_back(DyadicSet::cylinder(odometer_word(static_cast<std::uint64_t>(20 + 40 * n), 8)));
  }
  TranslateFamily fam = quarter_shrink(enforce_quarter(B, F), F);
  std::vector<DyadicSet> translates;
  bool inside = true;
  for (std::size_t n = 0; n < fam.A_seq.size(); ++n) {
    inside = inside && !fam.A_seq[n].empty() && fam.A_seq[n].subset_of(B[n]);
    for (const auto& f : F[n]) translates.push_back(f.image(fam.A_seq[n]));
  }
  bool family_ok = fam.disjoint && inside && measure_disjoint(translates);

  std::vector<DyadicSet> regions(fam.A_seq.begin(), fam.A_seq.begin() + 3);
  TowerResult tower = build_tower(T, regions, TowerConfig{});
  const auto& V = tower.generators;
  bool tower_ok = tower.ok() && pointwise_witnesses(T, V, tower);
  HFCheck hf = hf_check({t, V[0]}, 2, L);

  // Swap two clopen pieces outside the carrier.
  DyadicSet free = tower.carrier.complement();
  DyadicRational piece = DyadicRational::pow2(free.resolution() + 1);
  auto [x, rest] = split_front(free, piece);
  auto [y, rest2] = split_front(rest, piece);
  PartialDyadicIso xy = match_equal_measure(x, y);
  PrefixExchange perturb = glue({xy, xy.inverse()});
  std::vector<PrefixExchange> V2;
  for (const auto& v : V) V2.push_back(compose(perturb, v));
  bool off_support = perturb.support().disjoint(tower.carrier) && !perturb.is_identity();
  bool still = verify_tower_witnesses(T, V2, tower) && pointwise_witnesses(T, V2, tower);
  HFCheck hf2 = hf_check({t, V2[0]}, 2, L);

  Json a = Json::array();
  for (const auto& s : fam.A_seq) a.push_back(Json{{"set", to_json(s)}, {"measure", s.measure().str()}});
  o.pass = family_ok && tower_ok && hf.ok && off_support && still && hf2.ok;
  o.data = Json{{"A", a},
                {"family_disjoint", family_ok},
                {"tower", to_json(tower, false)},
                {"tower_ok", tower_ok},
                {"hf", to_json(hf)},
                {"perturbation", to_json(perturb)},
                {"perturbed_witnesses_ok", still},
                {"perturbed_hf", to_json(hf2)}};
  o.detail = std::string("family ") + (family_ok ? "disjoint" : "overlapping") + ", tower " +
             (tower_ok ? "verified" : "failed") + ", perturbed " + (still && hf2.ok ? "verified" : "failed");
  return o;
}

Outcome pipeline() {
  Outcome o;
  PipelineResult r = run_pipeline(PipelineConfig{});
  const auto& V = r.tower.generators;
  DyadicSet su = r.u.U.support();
  bool disjoint_oracle = measure_disjoint({su, V[0].support(), r.C[0].support()});

  Perm du = dense(r.u.U, r.u.U.resolution());
  bool u_orbits = true;
  for (auto len : kernels::serial::orbit_lengths(du)) u_orbits = u_orbits && is_pow(len, 2);
  bool orders_oracle = u_orbits;
  for (const auto& [len, m] : cycle_structure(V[0]).length_measure) orders_oracle = orders_oracle && is_pow(len, 3);
  for (const auto& c : r.C) {
    for (const auto& [len, m] : cycle_structure(c).length_measure) {
      orders_oracle = orders_oracle && (len == 1 || len == static_cast<std::uint64_t>(r.cfg.p + 2));
    }
  }

  DyadicRational mu_b = r.region.measure() + su.measure() - r.region.intersect(su).measure();
  Rational limit = Rational(1) - Rational(r.cfg.p + 2) * r.c / Rational(r.cfg.p);
  bool budget_oracle = mu_b == r.budget_set.measure() && Rational(mu_b) < limit;

  bool amen_oracle = !r.amenability.empty();
  for (const auto& a : r.amenability) {
    amen_oracle = amen_oracle && a.path_length >= static_cast<std::size_t>(2 * a.n + 1) && a.loops_elsewhere &&
                  a.t_ratio == Rational(2, 2 * a.n + 1);
  }
  o.pass = r.supports_disjoint && disjoint_oracle && r.orders_ok && orders_oracle && r.budget_ok && budget_oracle &&
           r.amenability_ok && amen_oracle;
  o.data = to_json(r);
  o.detail = std::string("disjoint=") + (r.supports_disjoint && disjoint_oracle ? "ok" : "FAIL") +
             " orders=" + (r.orders_ok && orders_oracle ? "ok" : "FAIL") + " budget " + mu_b.str() + " < " +
             limit.str() + (r.budget_ok && budget_oracle ? "" : " FAIL") +
             " amenability=" + (r.amenability_ok && amen_oracle ? "ok" : "FAIL");
  auto fails = r.failures();
  if (!fails.empty()) {
    o.detail += "; other certificates failing:";
    for (const auto& f : fails) o.detail += " [" + f + "]";
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
};

constexpr Criterion kCriteria[] = {
    {1, "support identity", 1.0},        {2, "root laws", 30.0},
    {3, "generation", 60.0},             {4, "kappa ledger", 60.0},
    {5, "word synthesis", 60.0},         {6, "commuting reconstruction", 60.0},
    {7, "residual 3-finiteness", 120.0}, {8, "high faithfulness", 60.0},
    {9, "pipeline end-to-end", 600.0},   {10, "determinism", 1200.0},
};

Outcome run_one(int id, std::uint64_t seed, bool quick) {
  SeededRng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id)));
  switch (id) {
    case 1: return support_identity();
    case 2: return root_laws(rng, quick);
    case 3: return generation();
    case 4: return kappa_ledger();
    case 5: return word_synthesis();
    case 6: return commuting_reconstruction(rng, quick);
    case 7: return residual_finiteness();
    case 8: return high_faithfulness();
    case 9: return pipeline();
    default: throw Error(ErrorCode::InvalidArgument, "unknown criterion " + std::to_string(id));
  }
}

CriterionResult timed(const Criterion& c, const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit;
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass && r.seconds < c.limit;
  r.detail = o.detail;
  if (o.pass && !r.pass) r.detail += " (time limit exceeded)";
  r.data = std::move(o.data);
  return r;
}

std::vector<CriterionResult> run_first_nine(std::uint64_t seed, bool quick, std::optional<int> only) {
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (c.id == 10 || (only && *only != c.id)) continue;
    out.push_back(timed(c, [&] { return run_one(c.id, seed, quick); }));
  }
  return out;
}

}  // namespace

Json acceptance_certificate(std::uint64_t seed, bool quick, const std::vector<CriterionResult>& results) {
  Json crit = Json::array();
  for (const auto& r : results) {
    crit.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
  }
  return Json{{"seed", seed}, {"quick", quick}, {"criteria", crit}};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool quick, std::optional<int> only) {
  std::vector<CriterionResult> out = run_first_nine(seed, quick, only);
  if (!only || *only == 10) {
    out.push_back(timed(kCriteria[9], [&] {
      std::vector<CriterionResult> first = out;
      if (only) first = run_first_nine(seed, quick, std::nullopt);
      std::vector<CriterionResult> second = run_first_nine(seed, quick, std::nullopt);
      std::string a = acceptance_certificate(seed, quick, first).dump();
      std::string b = acceptance_certificate(seed, quick, second).dump();
      Outcome o;
      o.pass = a == b;
      o.data = Json{{"digest_first", digest(a)}, {"digest_second", digest(b)}, {"bytes", a.size()}};
      o.detail = o.pass ? "two runs byte-identical (" + std::to_string(a.size()) + " bytes)"
                        : "certificates differ";
      return o;
    }));
  }
  return out;
}

}  // namespace cantor
