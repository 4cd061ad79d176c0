#include "cantor/graphing.hpp"

#include "cantor/error.hpp"

namespace cantor {

DyadicRational Graphing::cost() const {
  DyadicRational c;
  for (const auto& m : members) c += m.measure();
  return c;
}

namespace {

void check_chain(const std::vector<DyadicSet>& dom, const std::vector<DyadicSet>& rng, CycleReport& r) {
  std::size_t n = dom.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rng[i] != dom[i + 1]) {
      r.ok = false;
      r.violations.push_back("range of member " + std::to_string(i + 1) + " differs from domain of member " +
                             std::to_string(i + 2));
    }
  }
  if (n == 0) return;
  std::vector<DyadicSet> sets = dom;
  sets.push_back(rng.back());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].disjoint(sets[j])) {
        r.ok = false;
        r.violations.push_back("sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
      }
    }
  }
}

}  // namespace

CycleReport validate_pre_p_cycle(const PrePCycle& c) {
  CycleReport r;
  std::vector<DyadicSet> dom, rng;
  for (const auto& m : c.members) {
    dom.push_back(m.domain());
    rng.push_back(m.range());
  }
  check_chain(dom, rng, r);
  return r;
}

CycleReport validate_pre_p_cycle(const std::vector<StringPairs>& raw) {
  CycleReport r;
  std::vector<DyadicSet> dom, rng;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<BinaryWord> d, g;
    DyadicRational md, mg;
    for (const auto& [a, b] : raw[i]) {
      d.push_back(BinaryWord::parse(a));
      g.push_back(BinaryWord::parse(b));
      md += DyadicRational::pow2(d.back().length());
      mg += DyadicRational::pow2(g.back().length());
    }
    DyadicSet ds = DyadicSet::canonicalize(d);
    DyadicSet gs = DyadicSet::canonicalize(g);
    if (md != mg || ds.measure() != md || gs.measure() != mg) {
      r.ok = false;
      r.violations.push_back("measure mismatch in member " + std::to_string(i + 1));
    }
    dom.push_back(ds);
    rng.push_back(gs);
  }
  if (r.ok) {
    for (const auto& m : raw) PartialDyadicIso::from_strings(m);
  }
  check_chain(dom, rng, r);
  return r;
}

PrefixExchange cycle_closure(const PrePCycle& c) {
  CycleReport r = validate_pre_p_cycle(c);
  if (!r.ok) throw Error(ErrorCode::InvalidPreCycle, r.violations.front());
  if (c.members.empty()) return PrefixExchange{};
  std::vector<PartialDyadicIso> parts = c.members;
  PartialDyadicIso chain = c.members.front();
  for (std::size_t i = 1; i < c.members.size(); ++i) chain = compose(c.members[i], chain);
  parts.push_back(chain.inverse());
  return glue(parts);
}

PartialDyadicIso match_equal_measure(const DyadicSet& a, const DyadicSet& b) {
  if (a.measure() != b.measure()) {
    throw Error(ErrorCode::MeasureMismatch, a.measure().str() + " vs " + b.measure().str());
  }
  std::vector<BinaryWord> sa(a.words().rbegin(), a.words().rend());
  std::vector<BinaryWord> sb(b.words().rbegin(), b.words().rend());
  PairList pairs;
  while (!sa.empty()) {
    BinaryWord x = sa.back();
    BinaryWord y = sb.back();
    sa.pop_back();
    sb.pop_back();
    if (x.length() < y.length()) {
      sa.push_back(x.append(true));
      sa.push_back(x.append(false));
      sb.push_back(y);
    } else if (y.length() < x.length()) {
      sb.push_back(y.append(true));
      sb.push_back(y.append(false));
      sa.push_back(x);
    } else {
      pairs.push_back({x, y});
    }
  }
  return PartialDyadicIso::from_pairs(std::move(pairs));
}

std::vector<Graphing> split_into_subgraphings(const Graphing& g, int m, int max_level) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  DyadicRational cost = g.cost();
  DyadicRational block;
  bool found = false;
  for (int w = 0; w <= max_level && w <= 56 && !found; ++w) {
    if (cost.exponent() > w) continue;
    std::int64_t count = cost.scaled_to(w);
    if (count % m == 0) {
      block = DyadicRational(count / m, w);
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::IndivisibleCost,
                cost.str() + "/" + std::to_string(m) + " is not dyadic at level " + std::to_string(max_level));
  }
  std::vector<Graphing> out(static_cast<std::size_t>(m));
  std::size_t cur = 0;
  DyadicRational room = block;
  for (const auto& member : g.members) {
    DyadicSet rest = member.domain();
    while (!rest.empty()) {
      DyadicRational take = rest.measure() < room ? rest.measure() : room;
      auto [front, back] = split_front(rest, take);
      out[cur].members.push_back(member.restrict_to(front));
      rest = back;
      room -= take;
      if (room.is_zero() && cur + 1 < out.size()) {
        ++cur;
        room = block;
      }
    }
  }
  return out;
}

}  // namespace cantor
