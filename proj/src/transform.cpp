#include "cantor/transform.hpp"

#include <numeric>
#include <set>
#include <unordered_map>

#include "cantor/error.hpp"

namespace cantor {

PrefixExchange finite_odometer(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "finite_odometer needs n >= 1");
  PairList pairs;
  for (int j = 0; j < n; ++j) {
    pairs.push_back({BinaryWord::repeat(true, j).append(false), BinaryWord::repeat(false, j).append(true)});
  }
  pairs.push_back({BinaryWord::repeat(true, n), BinaryWord::repeat(false, n)});
  return PrefixExchange::from_pairs(std::move(pairs));
}

PrefixExchange odometer(const OdometerHandle& h) { return finite_odometer(h.level); }

BinaryWord odometer_word(std::uint64_t x, int L) {
  BinaryWord w;
  for (int i = 0; i < L; ++i) w = w.append((x >> i) & 1U);
  return w;
}

PrefixExchange transposition_U(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "transposition_U needs n >= 2");
  BinaryWord a = BinaryWord::repeat(false, n - 1).append(true);
  BinaryWord b = BinaryWord::repeat(true, n - 1).append(false);
  return PrefixExchange::from_pairs({{a, b}, {b, a}});
}

PrefixExchange root_2p(const PrefixExchange& u, int p) {
  if (p < 0) throw Error(ErrorCode::InvalidArgument, "root_2p needs p >= 0");
  if (p == 0 || u.is_identity()) return u;
  int q = u.resolution();
  PairList pairs;
  DyadicSet supp = u.support();
  for (const BinaryWord& s : supp.refine_to_level(q)) {
    for (int j = 0; j < p; ++j) {
      pairs.push_back({s.concat(BinaryWord::repeat(true, j).append(false)),
                       s.concat(BinaryWord::repeat(false, j).append(true))});
    }
    pairs.push_back({s.concat(BinaryWord::repeat(true, p)), u.apply(s).concat(BinaryWord::repeat(false, p))});
  }
  return PrefixExchange::from_pairs(std::move(pairs));
}

PrefixExchange power(const PrefixExchange& t, std::int64_t k) {
  if (k < 0) return power(t.inverse(), -k);
  PrefixExchange result;
  PrefixExchange base = t;
  while (k > 0) {
    if (k & 1) result = compose(base, result);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

DyadicRational uniform_distance(const PrefixExchange& t, const PrefixExchange& s) {
  return compose(s.inverse(), t).support().measure();
}

PrefixExchange induced(const PrefixExchange& t, const DyadicSet& a) {
  if (t.image(a) != a) throw Error(ErrorCode::NotInvariant, "set " + a.str() + " is not invariant");
  return PrefixExchange::from_pairs(t.restrict_to(a).pairs());
}

PairList embed_level(const PrefixExchange& sigma, int n) {
  if (sigma.resolution() > n) {
    throw Error(ErrorCode::InvalidArgument, "map resolution exceeds level " + std::to_string(n));
  }
  PairList out;
  for (const Pair& p : sigma.pairs()) {
    int extra = n + 1 - p.src.length();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << extra); ++x) {
      BinaryWord tail = BinaryWord::from_index(x, extra);
      out.push_back({p.src.concat(tail), p.dst.concat(tail)});
    }
  }
  return out;
}

std::vector<BinaryWord> orbit_of_word(const PrefixExchange& t, const BinaryWord& w, std::size_t max_length) {
  std::vector<BinaryWord> orbit{w};
  BinaryWord x = t.apply(w);
  while (x != w) {
    if (orbit.size() >= max_length) throw Error(ErrorCode::OrbitTooLarge, "orbit exceeds configured bound");
    orbit.push_back(x);
    x = t.apply(x);
  }
  return orbit;
}

std::uint64_t CycleStructure::order() const {
  std::uint64_t o = 1;
  for (const auto& [len, m] : length_measure) o = std::lcm(o, len);
  return o;
}

CycleStructure cycle_structure(const PrefixExchange& t) {
  std::set<BinaryWord> cells;
  DyadicSet supp = t.support();
  for (const BinaryWord& w : supp.words()) cells.insert(w);
  auto split = [&](const BinaryWord& c) {
    cells.erase(c);
    cells.insert(c.append(false));
    cells.insert(c.append(true));
  };
  std::unordered_map<BinaryWord, BinaryWord, BinaryWordHash> image;
  for (;;) {
    bool changed = false;
    image.clear();
    std::vector<BinaryWord> snapshot(cells.begin(), cells.end());
    for (const BinaryWord& c : snapshot) {
      if (!cells.count(c)) continue;
      PairList pieces = t.pieces(c);
      if (pieces.size() > 1) {
        split(c);
        changed = true;
        continue;
      }
      const BinaryWord& d = pieces[0].dst;
      auto it = cells.upper_bound(d);
      if (it != cells.begin() && std::prev(it)->is_prefix_of(d)) {
        BinaryWord owner = *std::prev(it);
        if (owner != d) {
          split(owner);
          changed = true;
        } else {
          image[c] = d;
        }
      } else {
        split(c);
        changed = true;
      }
    }
    if (!changed) break;
  }
  CycleStructure out;
  std::set<BinaryWord> seen;
  for (const BinaryWord& c : cells) {
    if (seen.count(c)) continue;
    std::vector<BinaryWord> cycle;
    BinaryWord x = c;
    do {
      seen.insert(x);
      cycle.push_back(x);
      x = image.at(x);
    } while (x != c);
    DyadicRational m;
    for (const auto& w : cycle) m += DyadicRational::pow2(w.length());
    out.length_measure[cycle.size()] += m;
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t base) {
  if (n == 0 || base < 2) return n == 1;
  while (n % base == 0) n /= base;
  return n == 1;
}

}  // namespace cantor
