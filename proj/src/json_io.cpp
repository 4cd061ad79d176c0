#include "cantor/json_io.hpp"

#include <cstdio>

#include "cantor/error.hpp"

namespace cantor {

namespace {

std::string word_text(const BinaryWord& w) { return w.empty() ? "e" : w.str(); }

}  // namespace

Json to_json(const DyadicRational& x) { return Json{{"num", x.numerator()}, {"exp", x.exponent()}}; }

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const DyadicSet& s) {
  Json a = Json::array();
  for (const auto& w : s.words()) a.push_back(word_text(w));
  return a;
}

Json to_json(const PairList& pairs) {
  Json a = Json::array();
  for (const auto& p : pairs) a.push_back(Json::array({word_text(p.src), word_text(p.dst)}));
  return a;
}

Json to_json(const PrefixExchange& t) { return to_json(t.pairs()); }

Json to_json(const PartialDyadicIso& t) { return to_json(t.pairs()); }

Json to_json(const Graphing& g) {
  Json a = Json::array();
  for (const auto& m : g.members) a.push_back(to_json(m));
  return a;
}

Json to_json(const GeneratorPlan& plan) {
  Json j;
  j["epsilon"] = to_json(plan.epsilon);
  j["K"] = plan.K;
  j["L"] = plan.L;
  j["n_seq"] = plan.n_seq;
  Json d = Json::array(), e = Json::array();
  for (const auto& x : plan.delta_seq) d.push_back(to_json(x));
  for (const auto& x : plan.eps_seq) e.push_back(to_json(x));
  j["delta_seq"] = d;
  j["eps_seq"] = e;
  Json kt = Json::object();
  for (const auto& [n, k] : plan.kappa_table) kt[std::to_string(n)] = k;
  j["kappa"] = kt;
  return j;
}

Json to_json(const LedgerEntry& e) {
  return Json{{"k", e.k},
              {"n_k", e.n_k},
              {"distance", to_json(e.distance)},
              {"bound", to_json(e.bound)},
              {"slack", to_json(e.slack)},
              {"pass", e.pass}};
}

Json to_json(const AssembleResult& a) {
  Json j;
  Json ledger = Json::array();
  for (const auto& e : a.ledger) ledger.push_back(to_json(e));
  j["ledger"] = ledger;
  j["ledger_ok"] = a.ledger_ok();
  j["support_measure"] = to_json(a.support_measure);
  j["support_ok"] = a.support_ok;
  j["U_pairs"] = a.U.pairs().size();
  j["U_digest"] = digest(to_json(a.U));
  return j;
}

Json to_json(const HFCheck& h) {
  return Json{{"ok", h.ok},
              {"radius", h.radius},
              {"words", h.words},
              {"moving_measure", to_json(h.moving.measure())},
              {"moving_digest", digest(to_json(h.moving))},
              {"failing_word", h.failing_word},
              {"slack", to_json(h.slack)}};
}

Json to_json(const TranslateFamily& f) {
  Json j;
  Json a = Json::array();
  for (const auto& s : f.A_seq) a.push_back(Json{{"set", to_json(s)}, {"measure", to_json(s.measure())}});
  j["A"] = a;
  Json sizes = Json::array();
  for (const auto& F : f.F_seq) sizes.push_back(F.size());
  j["F_sizes"] = sizes;
  j["disjoint"] = f.disjoint;
  return j;
}

Json to_json(const TowerResult& t, bool with_witnesses) {
  Json j;
  Json levels = Json::array();
  for (const auto& l : t.levels) {
    Json x{{"n", l.n},
           {"region", to_json(l.region)},
           {"witness", to_json(l.witness)},
           {"action_depth", l.action_depth},
           {"k_m", l.k_m},
           {"H_size", l.h_count},
           {"epsilon", to_json(l.epsilon)},
           {"families", l.families},
           {"witnesses_disjoint", l.witnesses_disjoint}};
    Json w = Json::array();
    for (std::size_t i = 0; i < l.words.size(); ++i) {
      w.push_back(Json::array({product_word_str(l.words[i]), to_json(l.images[i])}));
    }
    x["witness_digest"] = digest(w);
    if (with_witnesses) x["witness_sets"] = w;
    levels.push_back(x);
  }
  j["levels"] = levels;
  j["support_ok"] = t.support_ok;
  j["carrier_measure"] = to_json(t.carrier.measure());
  Json g = Json::array();
  for (const auto& v : t.generators) g.push_back(Json{{"pairs", v.pairs().size()}, {"digest", digest(to_json(v))}});
  j["generators"] = g;
  j["ok"] = t.ok();
  return j;
}

Json to_json(const SchreierGraph& g) {
  Json j;
  Json v = Json::array();
  for (const auto& w : g.vertices) v.push_back(word_text(w));
  j["vertices"] = v;
  j["edges"] = g.edges;
  j["edge_regular"] = g.edge_regular();
  return j;
}

Json to_json(const StabilizerSignature& s) {
  Json w = Json::array();
  for (const auto& x : s.words) w.push_back(x.str());
  return Json{{"basepoint", word_text(s.basepoint)}, {"words", w}};
}

Json to_json(const PipelineResult& r) {
  Json j;
  j["config"] = Json{{"m", r.cfg.m},
                     {"p", r.cfg.p},
                     {"q", r.cfg.q},
                     {"level", r.cfg.L},
                     {"factors", r.cfg.K},
                     {"tower_depth", r.cfg.tower_depth},
                     {"hf_radius", r.cfg.hf_radius},
                     {"stab_radius", r.cfg.stab_radius},
                     {"graphing", to_json(r.cfg.phi)}};
  j["c"] = to_json(r.c);
  j["epsilon"] = to_json(r.epsilon);
  j["plan"] = to_json(r.plan);
  j["U"] = to_json(r.u);
  Json res = Json::array();
  for (std::size_t n = 0; n < r.reservoirs.size(); ++n) {
    res.push_back(Json{{"A", to_json(r.reservoirs[n])},
                       {"A_tower", to_json(r.reservoir_tower[n])},
                       {"A_free", to_json(r.reservoir_free[n])}});
  }
  j["reservoirs"] = res;
  j["region_measure"] = to_json(r.region.measure());
  Json ex = Json::array();
  for (const auto& b : r.excluded) ex.push_back(Json{{"set", to_json(b)}, {"measure", to_json(b.measure())}});
  j["excluded"] = ex;
  j["budget"] = Json{{"measure_B", to_json(r.budget_set.measure())}, {"limit", to_json(r.budget_limit)}, {"ok", r.budget_ok}};
  Json D = Json::array();
  for (const auto& d : r.D) D.push_back(to_json(d));
  j["D"] = D;
  Json C = Json::array();
  for (const auto& c : r.C) C.push_back(to_json(c));
  j["C"] = C;
  j["tower"] = to_json(r.tower, false);
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(Json{{"pairs", g.pairs().size()}, {"digest", digest(to_json(g))}});
  j["generators"] = gens;
  j["supports_disjoint"] = r.supports_disjoint;
  j["orders_ok"] = r.orders_ok;
  j["order_notes"] = r.order_notes;
  Json rec = Json::array();
  for (const auto& d : r.recovery_distances) rec.push_back(to_json(d));
  j["recovery"] = Json{{"ok", r.recovery_ok}, {"distances", rec}};
  j["hf"] = to_json(r.hf);
  Json am = Json::array();
  for (const auto& a : r.amenability) {
    am.push_back(Json{{"n", a.n},
                      {"basepoint", word_text(a.basepoint)},
                      {"path_length", a.path_length},
                      {"loops_elsewhere", a.loops_elsewhere},
                      {"t_ratio", to_json(a.t_ratio)},
                      {"expected", to_json(a.expected)},
                      {"ok", a.ok}});
  }
  j["amenability"] = Json{{"ok", r.amenability_ok}, {"intervals", am}};
  j["stabilizers"] = Json{{"free_region", to_json(r.stab_free)},
                          {"tower_region", to_json(r.stab_tower)},
                          {"distinct", r.signatures_distinct}};
  j["failures"] = r.failures();
  j["pass"] = r.all_ok();
  return j;
}

Graphing graphing_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "graphing must be a JSON array");
  Graphing g;
  for (const auto& member : j) {
    StringPairs pairs;
    for (const auto& p : member) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidArgument, "pair must be [src, dst]");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    g.members.push_back(PartialDyadicIso::from_strings(pairs));
  }
  return g;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const Json& j) { return digest(j.dump()); }

}  // namespace cantor
