#include "cantor/rf_actions.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

#include "cantor/error.hpp"
#include "cantor/graphing.hpp"

namespace cantor {

std::uint32_t PointedFiniteAction::apply(const FreeWord& w, std::uint32_t x) const {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int a = *it;
    auto i = static_cast<std::size_t>(std::abs(a) - 1);
    if (i >= gens.size()) throw Error(ErrorCode::InvalidArgument, "letter exceeds m");
    x = a > 0 ? gens[i][x] : inv[i][x];
  }
  return x;
}

PointedFiniteAction PointedFiniteAction::from_generators(std::vector<kernels::Perm> gens, std::uint32_t basepoint) {
  PointedFiniteAction a;
  a.m = static_cast<int>(gens.size());
  for (const auto& g : gens) a.inv.push_back(kernels::serial::invert(g));
  a.gens = std::move(gens);
  a.basepoint = basepoint;
  return a;
}

PointedFiniteAction series_action(int q, int m, int d, std::size_t max_carrier) {
  std::vector<TruncatedSeries> gen;
  for (int i = 1; i <= m; ++i) gen.push_back(TruncatedSeries::generator(i, q, m, d));
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<TruncatedSeries> elems{TruncatedSeries::one(q, m, d)};
  index[elems[0].coefficients()] = 0;
  std::vector<kernels::Perm> perms(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (int i = 0; i < m; ++i) {
      TruncatedSeries y = gen[static_cast<std::size_t>(i)] * elems[k];
      auto [it, fresh] = index.emplace(y.coefficients(), static_cast<std::uint32_t>(elems.size()));
      if (fresh) {
        if (elems.size() >= max_carrier) {
          throw Error(ErrorCode::CarrierTooLarge, "carrier at depth " + std::to_string(d) + " exceeds " +
                                                      std::to_string(max_carrier));
        }
        elems.push_back(std::move(y));
      }
      auto& p = perms[static_cast<std::size_t>(i)];
      if (p.size() <= k) p.resize(k + 1);
      p[k] = it->second;
    }
  }
  for (auto& p : perms) p.resize(elems.size());
  PointedFiniteAction a = PointedFiniteAction::from_generators(std::move(perms), 0);
  a.depth = d;
  return a;
}

std::vector<PointedFiniteAction> action_sequence(int q, int m, const std::vector<int>& depths, std::size_t max_carrier) {
  std::vector<PointedFiniteAction> out;
  for (int d : depths) out.push_back(series_action(q, m, d, max_carrier));
  return out;
}

std::uint64_t perm_order(const kernels::Perm& p) {
  std::uint64_t o = 1;
  for (std::uint32_t len : kernels::serial::orbit_lengths(p)) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

int freeness_depth(const FreeWord& w, int q, int m, int max_depth) {
  for (int d = 0; d <= max_depth; ++d) {
    if (!magnus_image(w, q, m, d).is_one()) return d;
  }
  return -1;
}

namespace {

void check_cells(const std::vector<DyadicSet>& cells) {
  if (cells.empty()) return;
  DyadicRational mu = cells[0].measure();
  DyadicRational total;
  DyadicSet all;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].measure() != mu) {
      throw Error(ErrorCode::UnequalMeasures, "cell " + std::to_string(k) + " has measure " + cells[k].measure().str());
    }
    total += mu;
    all = all.unite(cells[k]);
  }
  if (all.measure() != total) throw Error(ErrorCode::NotDisjoint, "cells overlap");
}

}  // namespace

PrefixExchange cell_cycle(const std::vector<DyadicSet>& cells) {
  check_cells(cells);
  PrePCycle c;
  for (std::size_t k = 0; k + 1 < cells.size(); ++k) c.members.push_back(match_equal_measure(cells[k], cells[k + 1]));
  return cycle_closure(c);
}

std::vector<std::vector<PartialDyadicIso>> embed_parts(const PointedFiniteAction& a, const std::vector<DyadicSet>& cells) {
  check_cells(cells);
  if (cells.size() != a.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one cell per carrier point: " + std::to_string(a.size()) + " vs " +
                                                std::to_string(cells.size()));
  }
  std::vector<std::vector<PartialDyadicIso>> out;
  for (const auto& g : a.gens) {
    std::vector<PartialDyadicIso> parts;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (g[k] == k) continue;
      parts.push_back(match_equal_measure(cells[k], cells[g[k]]));
    }
    out.push_back(std::move(parts));
  }
  return out;
}

std::vector<PrefixExchange> embed_finite_action(const PointedFiniteAction& a, const std::vector<DyadicSet>& cells) {
  std::vector<PrefixExchange> out;
  for (const auto& parts : embed_parts(a, cells)) out.push_back(glue(parts));
  return out;
}

}  // namespace cantor
