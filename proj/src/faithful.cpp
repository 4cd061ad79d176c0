#include "cantor/faithful.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "cantor/error.hpp"

namespace cantor {

PrefixExchange word_map(const FreeWord& w, const std::vector<PrefixExchange>& gens) {
  PrefixExchange r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    auto i = static_cast<std::size_t>(std::abs(*it) - 1);
    if (i >= gens.size()) throw Error(ErrorCode::InvalidArgument, "letter exceeds generator count");
    r = compose(*it > 0 ? gens[i] : gens[i].inverse(), r);
  }
  return r;
}

DyadicSet disjoint_shrink(const PrefixExchange& t, const DyadicSet& a) {
  DyadicSet moved = a.intersect(t.support());
  if (moved.empty()) throw Error(ErrorCode::NowhereMoving, "map fixes " + a.str());
  std::vector<BinaryWord> chosen;
  DyadicSet taken, images;
  for (const BinaryWord& w : moved.words()) {
    for (const Pair& p : t.pieces(w)) {
      DyadicSet src = DyadicSet::cylinder(p.src);
      DyadicSet dst = DyadicSet::cylinder(p.dst);
      if (!src.disjoint(dst) || !src.disjoint(images) || !dst.disjoint(taken)) continue;
      taken = taken.unite(src);
      images = images.unite(dst);
    }
  }
  return taken;
}

DyadicSet disjoint_translates(const std::vector<PrefixExchange>& F, const DyadicSet& a) {
  DyadicSet out = a;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = 0; j < F.size(); ++j) {
      if (i == j) continue;
      PrefixExchange d = compose(F[j].inverse(), F[i]);
      if (!seen.insert(d.str()).second) continue;
      out = disjoint_shrink(d, out);
    }
  }
  return out;
}

bool family_disjoint(const TranslateSets& F_seq, const std::vector<DyadicSet>& A_seq) {
  DyadicRational total;
  DyadicSet all;
  for (std::size_t n = 0; n < A_seq.size() && n < F_seq.size(); ++n) {
    for (const auto& f : F_seq[n]) {
      DyadicSet img = f.image(A_seq[n]);
      if (!img.disjoint(all)) return false;
      total += img.measure();
      all = all.unite(img);
    }
  }
  return all.measure() == total;
}

namespace {

bool quarter_ok(const std::vector<DyadicSet>& B, const TranslateSets& F, std::size_t n) {
  DyadicRational lhs = B[n + 1].measure() * static_cast<std::int64_t>(F[n].size() * F[n + 1].size() * 4);
  return lhs < B[n].measure();
}

DyadicSet halve(const DyadicSet& s) {
  std::vector<BinaryWord> w;
  for (const auto& x : s.words()) w.push_back(x.append(false));
  return DyadicSet::canonicalize(std::move(w));
}

}  // namespace

std::vector<DyadicSet> enforce_quarter(std::vector<DyadicSet> B, const TranslateSets& F) {
  for (std::size_t n = 0; n + 1 < B.size(); ++n) {
    while (!quarter_ok(B, F, n)) {
      if (B[n + 1].resolution() >= BinaryWord::kMaxLength) {
        throw Error(ErrorCode::QuarterBoundViolated, "cannot shrink B_" + std::to_string(n + 1) + " further");
      }
      B[n + 1] = halve(B[n + 1]);
    }
  }
  return B;
}

TranslateFamily quarter_shrink(const std::vector<DyadicSet>& B, const TranslateSets& F) {
  if (F.size() < B.size()) throw Error(ErrorCode::InvalidArgument, "need one word set per B_n");
  for (std::size_t n = 0; n < B.size(); ++n) {
    if (!family_disjoint(TranslateSets{F[n]}, {B[n]})) {
      throw Error(ErrorCode::DisjointnessPreconditionFailed, "translates of B_" + std::to_string(n) + " overlap");
    }
  }
  for (std::size_t n = 0; n + 1 < B.size(); ++n) {
    if (!quarter_ok(B, F, n)) throw Error(ErrorCode::QuarterBoundViolated, "n=" + std::to_string(n));
  }
  TranslateFamily out;
  out.F_seq = F;
  for (std::size_t n = 0; n < B.size(); ++n) {
    DyadicSet removed;
    for (std::size_t k = n + 1; k < B.size(); ++k) {
      for (const auto& f2 : F[k]) {
        DyadicSet t = f2.image(B[k]);
        for (const auto& f1 : F[n]) removed = removed.unite(f1.inverse().image(t));
      }
    }
    DyadicSet a = B[n].minus(removed);
    if (a.empty()) throw Error(ErrorCode::QuarterBoundViolated, "A_" + std::to_string(n) + " is empty");
    out.A_seq.push_back(a);
  }
  out.disjoint = family_disjoint(F, out.A_seq);
  return out;
}

HFCheck hf_check(const std::vector<PrefixExchange>& gens, int r, int L) {
  HFCheck out;
  out.radius = r;
  out.moving = DyadicSet::full();
  out.slack = DyadicRational::pow2(L) * static_cast<std::int64_t>(r);
  for (const FreeWord& w : enumerate_reduced(static_cast<int>(gens.size()), r)) {
    ++out.words;
    out.moving = out.moving.intersect(word_map(w, gens).support());
    if (out.moving.empty()) {
      out.failing_word = w.str();
      return out;
    }
  }
  out.ok = true;
  return out;
}

std::string product_word_str(const ProductWord& h) {
  if (h.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += " ";
    s += h[i].is_t ? "T^" + std::to_string(h[i].t_power) : "(" + h[i].lambda.str() + ")";
  }
  return s;
}

bool TowerResult::ok() const {
  if (!support_ok) return false;
  for (const auto& l : levels) {
    if (!l.witnesses_disjoint) return false;
  }
  return true;
}

namespace {

// Yields consecutive cylinders of a fixed length inside a region.
class CellAllocator {
 public:
  CellAllocator(const DyadicSet& region, int depth) : words_(region.words()), depth_(depth) {}

  BinaryWord next() {
    while (idx_ < words_.size()) {
      const BinaryWord& w = words_[idx_];
      int extra = depth_ - w.length();
      if (extra < 63 && counter_ < (std::uint64_t{1} << extra)) {
        return w.concat(BinaryWord::from_index(counter_++, extra));
      }
      ++idx_;
      counter_ = 0;
    }
    throw Error(ErrorCode::EpsilonTooLarge, "region exhausted while allocating cells");
  }

 private:
  std::vector<BinaryWord> words_;
  int depth_;
  std::size_t idx_ = 0;
  std::uint64_t counter_ = 0;
};

DyadicSet apply_lambda(const FreeWord& w, const std::vector<PrefixExchange>& gens,
                       const std::vector<PrefixExchange>& inv, const DyadicSet& s) {
  DyadicSet x = s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    auto i = static_cast<std::size_t>(std::abs(*it) - 1);
    x = (*it > 0 ? gens[i] : inv[i]).image(x);
  }
  return x;
}

struct Powers {
  int n;
  std::vector<PrefixExchange> maps;  // index i + n holds T^i
  const PrefixExchange& at(int i) const { return maps[static_cast<std::size_t>(i + n)]; }
};

Powers t_powers(const OdometerHandle& T, int n) {
  Powers p{n, {}};
  PrefixExchange t = odometer(T);
  for (int i = -n; i <= n; ++i) p.maps.push_back(power(t, i));
  return p;
}

bool pairwise_disjoint(const std::vector<DyadicSet>& sets) {
  std::vector<BinaryWord> all;
  for (const auto& s : sets) all.insert(all.end(), s.words().begin(), s.words().end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i - 1].comparable(all[i])) return false;
  }
  return true;
}

}  // namespace

DyadicSet tower_carrier(const OdometerHandle& T, const std::vector<DyadicSet>& regions) {
  int n_max = static_cast<int>(regions.size()) - 1;
  Powers pw = t_powers(T, std::max(n_max, 0));
  DyadicSet all;
  for (int n = 0; n <= n_max; ++n) {
    for (int i = -n; i <= n; ++i) all = all.unite(pw.at(i).image(regions[static_cast<std::size_t>(n)]));
  }
  return all;
}

TowerResult build_tower(const OdometerHandle& T, const std::vector<DyadicSet>& regions, const TowerConfig& cfg) {
  int n_max = static_cast<int>(regions.size()) - 1;
  TowerResult out;
  if (n_max < 0) {
    out.generators.assign(static_cast<std::size_t>(cfg.m), PrefixExchange{});
    out.support_ok = true;
    return out;
  }
  Powers pw = t_powers(T, n_max);
  {
    std::vector<DyadicSet> translates;
    for (int n = 0; n <= n_max; ++n) {
      if (regions[static_cast<std::size_t>(n)].empty()) {
        throw Error(ErrorCode::DisjointnessPreconditionFailed, "region " + std::to_string(n) + " is empty");
      }
      for (int i = -n; i <= n; ++i) translates.push_back(pw.at(i).image(regions[static_cast<std::size_t>(n)]));
    }
    if (!pairwise_disjoint(translates)) {
      throw Error(ErrorCode::DisjointnessPreconditionFailed, "translates T^i A_n overlap");
    }
  }
  std::vector<std::vector<PartialDyadicIso>> parts(static_cast<std::size_t>(cfg.m));

  for (int n = 0; n <= n_max; ++n) {
    const DyadicSet& region = regions[static_cast<std::size_t>(n)];
    TowerLevel lv;
    lv.n = n;
    lv.region = region;
    std::vector<FreeWord> G = enumerate_reduced(cfg.m, n, true);
    std::vector<FreeWord> Gp(G.begin() + 1, G.end());
    std::vector<int> Fp;
    for (int i = -n; i <= n; ++i) {
      if (i) Fp.push_back(i);
    }

    std::optional<PointedFiniteAction> act;
    for (int d : cfg.action_depths) {
      PointedFiniteAction a = series_action(cfg.q, cfg.m, d, cfg.max_carrier);
      std::set<std::uint32_t> imgs;
      for (const auto& g : G) imgs.insert(a.apply(g, a.basepoint));
      if (imgs.size() == G.size()) {
        act = std::move(a);
        break;
      }
    }
    if (!act) throw Error(ErrorCode::ConfigInfeasible, "no action separates G_" + std::to_string(n));
    lv.action_depth = act->depth;
    lv.k_m = act->size();

    std::uint64_t hcount = 0, ik = G.size();
    for (int k = 0; k <= n; ++k) {
      hcount += ik + ik * Fp.size();
      ik = ik * Fp.size() * Gp.size();
    }
    lv.h_count = hcount;
    Rational bound = Rational(region.measure()) / Rational(static_cast<std::int64_t>(lv.k_m * hcount));
    DyadicRational eps = DyadicRational::largest_pow2_below(bound);
    if (cfg.epsilon_override) {
      if (!(Rational(*cfg.epsilon_override) < bound)) {
        throw Error(ErrorCode::EpsilonTooLarge, cfg.epsilon_override->str() + " >= " + bound.str());
      }
      eps = *cfg.epsilon_override;
    }
    if (eps.numerator() != 1) throw Error(ErrorCode::InvalidArgument, "cell measure must be a power of two");
    int depth = std::max({eps.exponent(), T.level, region.resolution()});
    if (depth > BinaryWord::kMaxLength) throw Error(ErrorCode::EpsilonTooLarge, "cells deeper than word capacity");
    lv.epsilon = DyadicRational::pow2(depth);
    CellAllocator alloc(region, depth);

    auto new_family = [&](const DyadicSet& first) {
      std::vector<DyadicSet> cells{first};
      for (std::size_t k = 1; k < lv.k_m; ++k) cells.push_back(DyadicSet::cylinder(alloc.next()));
      auto p = embed_parts(*act, cells);
      for (std::size_t i = 0; i < p.size(); ++i) parts[i].insert(parts[i].end(), p[i].begin(), p[i].end());
      ++lv.families;
      return cells;
    };

    lv.witness = DyadicSet::cylinder(alloc.next());
    std::vector<DyadicSet> base = new_family(lv.witness);
    std::vector<ProductWord> I_words;
    std::vector<DyadicSet> I_sets;
    for (const auto& g : G) {
      ProductWord h;
      if (!g.empty()) h.push_back({false, 0, g});
      I_words.push_back(h);
      I_sets.push_back(base[act->apply(g, act->basepoint)]);
    }
    for (int l = 0; l <= n; ++l) {
      lv.words.insert(lv.words.end(), I_words.begin(), I_words.end());
      lv.images.insert(lv.images.end(), I_sets.begin(), I_sets.end());
      std::vector<ProductWord> J_words;
      std::vector<DyadicSet> J_sets;
      for (int f : Fp) {
        for (std::size_t j = 0; j < I_words.size(); ++j) {
          ProductWord h{{true, f, {}}};
          h.insert(h.end(), I_words[j].begin(), I_words[j].end());
          J_words.push_back(std::move(h));
          J_sets.push_back(pw.at(f).image(I_sets[j]));
        }
      }
      lv.words.insert(lv.words.end(), J_words.begin(), J_words.end());
      lv.images.insert(lv.images.end(), J_sets.begin(), J_sets.end());
      if (l == n) break;
      I_words.clear();
      I_sets.clear();
      std::vector<std::vector<DyadicSet>> fams;
      for (const auto& s : J_sets) fams.push_back(new_family(s));
      for (const auto& lam : Gp) {
        std::uint32_t idx = act->apply(lam, act->basepoint);
        for (std::size_t j = 0; j < J_words.size(); ++j) {
          ProductWord h{{false, 0, lam}};
          h.insert(h.end(), J_words[j].begin(), J_words[j].end());
          I_words.push_back(std::move(h));
          I_sets.push_back(fams[j][idx]);
        }
      }
    }
    lv.witnesses_disjoint = pairwise_disjoint(lv.images);
    out.levels.push_back(std::move(lv));
  }
  for (auto& p : parts) out.generators.push_back(glue(p));
  out.carrier = tower_carrier(T, regions);
  out.support_ok = true;
  for (const auto& g : out.generators) out.support_ok = out.support_ok && g.support().subset_of(out.carrier);
  bool verified = verify_tower_witnesses(T, out.generators, out);
  for (auto& l : out.levels) l.witnesses_disjoint = l.witnesses_disjoint && verified;
  return out;
}

bool verify_tower_witnesses(const OdometerHandle& T, const std::vector<PrefixExchange>& gens, const TowerResult& tower) {
  int n_max = static_cast<int>(tower.levels.size()) - 1;
  if (n_max < 0) return true;
  Powers pw = t_powers(T, n_max);
  std::vector<PrefixExchange> inv;
  for (const auto& g : gens) inv.push_back(g.inverse());
  for (const auto& lv : tower.levels) {
    std::vector<DyadicSet> got(lv.words.size());
    bool match = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : match)
    for (std::size_t j = 0; j < lv.words.size(); ++j) {
      DyadicSet x = lv.witness;
      const ProductWord& h = lv.words[j];
      for (auto it = h.rbegin(); it != h.rend(); ++it) {
        x = it->is_t ? pw.at(it->t_power).image(x) : apply_lambda(it->lambda, gens, inv, x);
      }
      match = match && x == lv.images[j];
      got[j] = std::move(x);
    }
    if (!match || !pairwise_disjoint(got)) return false;
  }
  return true;
}

}  // namespace cantor
