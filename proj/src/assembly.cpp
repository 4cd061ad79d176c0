#include "cantor/assembly.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "cantor/commuting.hpp"
#include "cantor/error.hpp"

namespace cantor {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

DyadicSet append_bit(const DyadicSet& s, bool bit) {
  std::vector<BinaryWord> w;
  for (const auto& x : s.words()) w.push_back(x.append(bit));
  return DyadicSet::canonicalize(std::move(w));
}

int max_resolution(const std::vector<PrefixExchange>& gens) {
  int r = 0;
  for (const auto& g : gens) r = std::max(r, g.resolution());
  return r;
}

BinaryWord pad_to(const BinaryWord& w, int len) {
  return w.length() >= len ? w : w.concat(BinaryWord::repeat(false, len - w.length()));
}

PrePCycle build_pre_cycle(const Graphing& phi, const std::vector<DyadicSet>& D, int p, const DyadicRational& slot) {
  std::deque<Pair> queue;
  for (const auto& member : phi.members) queue.insert(queue.end(), member.pairs().begin(), member.pairs().end());
  PrePCycle out;
  for (int j = 0; j < p; ++j) {
    DyadicSet dom_rest = D[static_cast<std::size_t>(j)];
    DyadicSet rng_rest = D[static_cast<std::size_t>(j + 1)];
    DyadicRational room = slot;
    std::vector<PartialDyadicIso> parts;
    while (!room.is_zero() && !queue.empty()) {
      Pair piece = queue.front();
      DyadicRational mu = DyadicRational::pow2(piece.src.length());
      if (mu > room) {
        queue.pop_front();
        queue.push_front({piece.src.append(true), piece.dst.append(true)});
        queue.push_front({piece.src.append(false), piece.dst.append(false)});
        continue;
      }
      queue.pop_front();
      auto [e, dr] = split_front(dom_rest, mu);
      auto [f, rr] = split_front(rng_rest, mu);
      dom_rest = dr;
      rng_rest = rr;
      room -= mu;
      PartialDyadicIso into = match_equal_measure(e, DyadicSet::cylinder(piece.src));
      PartialDyadicIso rho = PartialDyadicIso::from_pairs({piece});
      PartialDyadicIso outof = match_equal_measure(DyadicSet::cylinder(piece.dst), f);
      parts.push_back(compose(outof, compose(rho, into)));
    }
    if (!dom_rest.empty()) parts.push_back(match_equal_measure(dom_rest, rng_rest));
    out.members.push_back(merge(parts));
  }
  if (!queue.empty()) throw Error(ErrorCode::ConfigInfeasible, "graphing does not fit into the D_j slots");
  out.members.push_back(match_equal_measure(D[static_cast<std::size_t>(p)], D[static_cast<std::size_t>(p + 1)]));
  return out;
}

bool orbit_class(const PrefixExchange& t, const std::function<bool(std::uint64_t)>& ok, std::string& note,
                 const std::string& name) {
  for (const auto& [len, m] : cycle_structure(t).length_measure) {
    if (!ok(len)) {
      note = name + " has an orbit of length " + std::to_string(len);
      return false;
    }
  }
  return true;
}

}  // namespace

void validate_config(const PipelineConfig& cfg) {
  if (cfg.m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  if (cfg.p < 1 || cfg.p % 2 == 0) throw Error(ErrorCode::InvalidArgument, "p must be odd");
  if (cfg.q < 3 || !is_prime(cfg.q)) throw Error(ErrorCode::InvalidArgument, "q must be an odd prime");
  if ((cfg.p + 2) % cfg.q == 0) throw Error(ErrorCode::InvalidArgument, "q must not divide p+2");
  if (cfg.L < 2 || cfg.L > 40) throw Error(ErrorCode::InvalidArgument, "level must lie in [2, 40]");
  if (cfg.tower_depth < 0) throw Error(ErrorCode::InvalidArgument, "tower depth must be non-negative");
  std::uint64_t last = static_cast<std::uint64_t>(cfg.tower_depth + 1) * static_cast<std::uint64_t>(cfg.tower_depth + 1) +
                       static_cast<std::uint64_t>(cfg.tower_depth);
  if (last >= (std::uint64_t{1} << cfg.L)) throw Error(ErrorCode::ConfigInfeasible, "reservoirs do not fit at this level");
  Rational c = Rational(cfg.phi.cost()) / Rational(cfg.m);
  if (!(Rational(cfg.p + 2) * c / Rational(cfg.p) < Rational(1))) {
    throw Error(ErrorCode::ConfigInfeasible, "(p+2)c/p must be below 1, got c=" + c.str());
  }
}

bool SchreierGraph::edge_regular() const {
  for (const auto& e : edges) {
    if (e.size() != vertices.size()) return false;
  }
  return true;
}

namespace {

SchreierGraph bfs(const std::vector<PrefixExchange>& gens, const BinaryWord& w, int radius, std::size_t max_vertices) {
  int res = std::max(max_resolution(gens), w.length());
  std::vector<PrefixExchange> moves = gens;
  for (const auto& g : gens) moves.push_back(g.inverse());
  SchreierGraph g;
  std::unordered_map<BinaryWord, std::size_t, BinaryWordHash> index;
  g.vertices.push_back(pad_to(w, res));
  index[g.vertices[0]] = 0;
  std::vector<int> dist{0};
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    if (radius >= 0 && dist[k] >= radius) continue;
    for (const auto& mv : moves) {
      BinaryWord y = mv.apply(g.vertices[k]);
      if (index.count(y)) continue;
      if (g.vertices.size() >= max_vertices) throw Error(ErrorCode::OrbitTooLarge, "orbit exceeds configured bound");
      index[y] = g.vertices.size();
      g.vertices.push_back(y);
      dist.push_back(dist[k] + 1);
    }
  }
  for (const auto& gen : gens) {
    std::vector<std::int64_t> e(g.vertices.size(), -1);
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      auto it = index.find(gen.apply(g.vertices[k]));
      if (it != index.end()) e[k] = static_cast<std::int64_t>(it->second);
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

}  // namespace

SchreierGraph schreier_orbit(const std::vector<PrefixExchange>& gens, const BinaryWord& w, std::size_t max_vertices) {
  return bfs(gens, w, -1, max_vertices);
}

SchreierGraph schreier_ball(const std::vector<PrefixExchange>& gens, const BinaryWord& w, int radius) {
  return bfs(gens, w, radius, std::size_t{1} << 24);
}

std::vector<FolnerReport> folner_witness(const SchreierGraph& g, const std::vector<std::vector<std::size_t>>& candidates,
                                         const Rational& bound) {
  std::vector<FolnerReport> out;
  for (const auto& cand : candidates) {
    FolnerReport r;
    std::vector<char> in(g.vertices.size(), 0);
    for (std::size_t v : cand) in[v] = 1;
    r.size = cand.size();
    Rational worst(0);
    for (const auto& e : g.edges) {
      // |gF minus F| = |F minus gF| for a bijection, so the symmetric difference is twice it.
      std::int64_t leaving = 0;
      for (std::size_t v : cand) {
        if (e[v] < 0 || !in[static_cast<std::size_t>(e[v])]) ++leaving;
      }
      Rational ratio = r.size ? Rational(2 * leaving, static_cast<std::int64_t>(r.size)) : Rational(0);
      r.ratios.push_back(ratio);
      worst = std::max(worst, ratio);
    }
    r.flagged = r.size > 0 && worst <= Rational(2, static_cast<std::int64_t>(r.size)) + bound;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> t_interval(const SchreierGraph& g, std::size_t t, std::size_t center, int n) {
  std::vector<std::int64_t> inv(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.edges[t][v] >= 0) inv[static_cast<std::size_t>(g.edges[t][v])] = static_cast<std::int64_t>(v);
  }
  std::vector<std::size_t> back, fwd;
  std::int64_t x = static_cast<std::int64_t>(center);
  for (int i = 0; i < n; ++i) {
    x = inv[static_cast<std::size_t>(x)];
    if (x < 0) return {};
    back.push_back(static_cast<std::size_t>(x));
  }
  x = static_cast<std::int64_t>(center);
  for (int i = 0; i < n; ++i) {
    x = g.edges[t][static_cast<std::size_t>(x)];
    if (x < 0) return {};
    fwd.push_back(static_cast<std::size_t>(x));
  }
  std::vector<std::size_t> out(back.rbegin(), back.rend());
  out.push_back(center);
  out.insert(out.end(), fwd.begin(), fwd.end());
  std::vector<std::size_t> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return out;
}

StabilizerSignature stabilizer_signature(const std::vector<PrefixExchange>& gens, const BinaryWord& w, int r) {
  StabilizerSignature s;
  s.basepoint = pad_to(w, std::max(max_resolution(gens), w.length()));
  std::vector<PrefixExchange> inv;
  for (const auto& g : gens) inv.push_back(g.inverse());
  for (const FreeWord& word : enumerate_reduced(static_cast<int>(gens.size()), r, true)) {
    BinaryWord x = s.basepoint;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      auto i = static_cast<std::size_t>(std::abs(*it) - 1);
      x = (*it > 0 ? gens[i] : inv[i]).apply(x);
    }
    if (x == s.basepoint) s.words.push_back(word);
  }
  return s;
}

bool PipelineResult::all_ok() const { return failures().empty(); }

std::vector<std::string> PipelineResult::failures() const {
  std::vector<std::string> f;
  if (!u.ledger_ok()) f.push_back("error ledger");
  if (!u.support_ok) f.push_back("support of U below epsilon");
  if (!budget_ok) f.push_back("budget inequality");
  if (!supports_disjoint) f.push_back("disjoint supports");
  if (!orders_ok) f.push_back("orbit-order classes");
  if (!recovery_ok) f.push_back("factor recovery");
  if (!tower.ok()) f.push_back("tower witnesses");
  if (!hf.ok) f.push_back("high faithfulness");
  if (!amenability_ok) f.push_back("amenability intervals");
  if (!signatures_distinct) f.push_back("stabilizer signatures");
  return f;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  validate_config(cfg);
  PipelineResult r;
  r.cfg = cfg;
  r.c = Rational(cfg.phi.cost()) / Rational(cfg.m);
  Rational load = Rational(cfg.p + 2) * r.c / Rational(cfg.p);
  r.epsilon = DyadicRational::floor_at((Rational(1) - load) / Rational(2), cfg.L);
  r.plan = plan_sequences(r.epsilon, cfg.K, cfg.L);
  OdometerHandle T{cfg.L};
  PrefixExchange t = odometer(T);

  // Reservoirs at odometer positions (n+1)^2, so that the intervals
  // [(n+1)^2 - n, (n+1)^2 + n] are disjoint and avoid the wrap.
  for (int n = 0; n <= cfg.tower_depth; ++n) {
    auto pos = static_cast<std::uint64_t>((n + 1) * (n + 1));
    r.reservoirs.push_back(DyadicSet::cylinder(odometer_word(pos, cfg.L)));
  }
  std::vector<PrefixExchange> tp;
  for (int i = -cfg.tower_depth; i <= cfg.tower_depth; ++i) tp.push_back(power(t, i));
  auto translates = [&](const DyadicSet& a, int n) {
    DyadicSet all;
    for (int i = -n; i <= n; ++i) all = all.unite(tp[static_cast<std::size_t>(i + cfg.tower_depth)].image(a));
    return all;
  };
  // Intersection control against every supp U_{n_k}.
  for (int n = 0; n <= cfg.tower_depth; ++n) {
    auto& a = r.reservoirs[static_cast<std::size_t>(n)];
    for (int k = 0; k < r.plan.K; ++k) {
      DyadicSet supp = transposition_U(r.plan.n_seq[static_cast<std::size_t>(k)]).support();
      DyadicRational limit = r.plan.delta_seq[static_cast<std::size_t>(k)].halved(k + n + 2);
      while (!(translates(a, n).intersect(supp).measure() < limit)) a = append_bit(a, false);
    }
  }
  for (int n = 0; n <= cfg.tower_depth; ++n) {
    r.region = r.region.unite(translates(r.reservoirs[static_cast<std::size_t>(n)], n));
    r.reservoir_tower.push_back(append_bit(r.reservoirs[static_cast<std::size_t>(n)], false));
    r.reservoir_free.push_back(append_bit(r.reservoirs[static_cast<std::size_t>(n)], true));
  }
  for (int k = 0; k < r.plan.K; ++k) {
    PrefixExchange un = transposition_U(r.plan.n_seq[static_cast<std::size_t>(k)]);
    PrefixExchange root = root_2p(un, k);
    DyadicSet seed = un.support().intersect(r.region);
    DyadicSet bbar;
    PrefixExchange step;
    for (int j = 0; j < (2 << k); ++j) {
      bbar = bbar.unite(step.image(seed));
      step = compose(root, step);
    }
    r.excluded.push_back(bbar);
  }
  r.u = assemble_U(r.plan, r.excluded);

  r.budget_set = r.region.unite(r.u.U.support());
  r.budget_limit = Rational(1) - load;
  r.budget_ok = Rational(r.budget_set.measure()) < r.budget_limit;

  DyadicRational slot = DyadicRational::ceil_at(r.c / Rational(cfg.p), cfg.L);
  DyadicSet free = r.budget_set.complement();
  if (slot * static_cast<std::int64_t>(cfg.p + 2) > free.measure()) {
    throw Error(ErrorCode::ConfigInfeasible, "no room for the D_j sets outside B");
  }
  for (int j = 0; j < cfg.p + 2; ++j) {
    auto [d, rest] = split_front(free, slot);
    r.D.push_back(d);
    free = rest;
  }
  if (cfg.phi.members.empty()) {
    r.C.assign(static_cast<std::size_t>(cfg.m), PrefixExchange{});
  } else {
    for (const Graphing& gi : split_into_subgraphings(cfg.phi, cfg.m, 56)) {
      r.cycles.push_back(build_pre_cycle(gi, r.D, cfg.p, slot));
      r.C.push_back(cycle_closure(r.cycles.back()));
    }
  }

  TowerConfig tc;
  tc.q = cfg.q;
  tc.m = cfg.m;
  tc.action_depths = cfg.action_depths;
  r.tower = build_tower(T, r.reservoir_tower, tc);
  const auto& V = r.tower.generators;

  r.generators.push_back(t);
  r.generators.push_back(compose(r.u.U, compose(V[0], r.C[0])));
  for (int i = 1; i < cfg.m; ++i) {
    r.generators.push_back(compose(V[static_cast<std::size_t>(i)], r.C[static_cast<std::size_t>(i)]));
  }

  DyadicSet su = r.u.U.support();
  r.supports_disjoint = su.disjoint(V[0].support()) && su.disjoint(r.C[0].support());
  for (int i = 0; i < cfg.m; ++i) {
    r.supports_disjoint = r.supports_disjoint &&
                          V[static_cast<std::size_t>(i)].support().disjoint(r.C[static_cast<std::size_t>(i)].support());
  }

  std::string note;
  auto q = static_cast<std::uint64_t>(cfg.q);
  auto cyc = static_cast<std::uint64_t>(cfg.p + 2);
  r.orders_ok = orbit_class(r.u.U, [](std::uint64_t n) { return is_power_of(n, 2); }, note, "U");
  if (!note.empty()) r.order_notes.push_back(note);
  for (int i = 0; i < cfg.m; ++i) {
    note.clear();
    bool a = orbit_class(V[static_cast<std::size_t>(i)], [q](std::uint64_t n) { return is_power_of(n, q); }, note,
                         "V_" + std::to_string(i + 1));
    if (!note.empty()) r.order_notes.push_back(note);
    note.clear();
    bool b = orbit_class(r.C[static_cast<std::size_t>(i)], [cyc](std::uint64_t n) { return n == cyc; }, note,
                         "C_" + std::to_string(i + 1));
    if (!note.empty()) r.order_notes.push_back(note);
    r.orders_ok = r.orders_ok && a && b;
  }

  if (r.supports_disjoint && r.orders_ok) {
    r.recovery_ok = true;
    auto first = reconstruct_all({{r.u.U, 2}, {V[0], q}, {r.C[0], cyc}});
    for (const auto& rec : first) r.recovery_distances.push_back(rec.distance);
    for (int i = 1; i < cfg.m; ++i) {
      for (const auto& rec : reconstruct_all({{V[static_cast<std::size_t>(i)], q}, {r.C[static_cast<std::size_t>(i)], cyc}})) {
        r.recovery_distances.push_back(rec.distance);
      }
    }
    for (const auto& d : r.recovery_distances) r.recovery_ok = r.recovery_ok && d.is_zero();
  }

  r.hf = hf_check(r.generators, cfg.hf_radius, cfg.L);

  r.amenability_ok = true;
  for (int n = 0; n <= cfg.tower_depth; ++n) {
    AmenabilityWitness w;
    w.n = n;
    w.basepoint = r.reservoir_free[static_cast<std::size_t>(n)].words().front();
    SchreierGraph ball = schreier_ball(r.generators, w.basepoint, n);
    std::vector<std::size_t> path = t_interval(ball, 0, 0, n);
    w.path_length = path.size();
    w.loops_elsewhere = !path.empty();
    for (std::size_t g = 1; g < ball.edges.size(); ++g) {
      for (std::size_t v : path) w.loops_elsewhere = w.loops_elsewhere && ball.edges[g][v] == static_cast<std::int64_t>(v);
    }
    w.expected = Rational(2, 2 * n + 1);
    if (!path.empty()) {
      FolnerReport rep = folner_witness(ball, {path}).front();
      w.t_ratio = rep.ratios[0];
      bool others_zero = true;
      for (std::size_t g = 1; g < rep.ratios.size(); ++g) others_zero = others_zero && rep.ratios[g] == Rational(0);
      w.ok = w.path_length == static_cast<std::size_t>(2 * n + 1) && w.loops_elsewhere && w.t_ratio == w.expected &&
             others_zero;
    }
    r.amenability_ok = r.amenability_ok && w.ok;
    r.amenability.push_back(std::move(w));
  }

  r.stab_free = stabilizer_signature(r.generators, r.reservoir_free.front().words().front(), cfg.stab_radius);
  r.stab_tower = stabilizer_signature(r.generators, r.tower.levels.back().witness.words().front(), cfg.stab_radius);
  r.signatures_distinct = r.stab_free.words != r.stab_tower.words;
  return r;
}

}  // namespace cantor
