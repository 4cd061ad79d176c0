#include "cantor/commuting.hpp"

#include <numeric>

#include "cantor/error.hpp"
#include "cantor/transform.hpp"

namespace cantor {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked_pow(std::uint64_t b, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > (u128{1} << 62)) throw Error(ErrorCode::TooLarge, "power exceeds 2^62");
  }
  return static_cast<std::uint64_t>(r);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  __int128 old_r = static_cast<__int128>(a % m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  __int128 mm = m;
  __int128 x = ((old_s % mm) + mm) % mm;
  return x == 0 ? m : static_cast<std::uint64_t>(x);
}

}  // namespace

int orbit_exponent(std::uint64_t n, std::uint64_t base) {
  if (n == 0) return -1;
  int e = 0;
  while (n > 1) {
    std::uint64_t g = std::gcd(n, base);
    if (g == 1) return -1;
    n /= g;
    ++e;
  }
  return e;
}

int max_orbit_exponent(const PrefixExchange& t, std::uint64_t base) {
  int best = 0;
  for (const auto& [len, m] : cycle_structure(t).length_measure) {
    int e = orbit_exponent(len, base);
    if (e < 0) {
      throw Error(ErrorCode::OrderMismatch,
                  "orbit length " + std::to_string(len) + " does not divide a power of " + std::to_string(base));
    }
    best = std::max(best, e);
  }
  return best;
}

bool valid_factor(const FactorSpec& f) {
  for (const auto& [len, m] : cycle_structure(f.map).length_measure) {
    if (orbit_exponent(len, f.base) < 0) return false;
  }
  return true;
}

std::uint64_t reconstruction_exponent(std::uint64_t p, std::uint64_t q, int N) {
  if (p < 2 || q < 1) throw Error(ErrorCode::InvalidArgument, "bases must satisfy p >= 2, q >= 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::NotCoprime, std::to_string(p) + " and " + std::to_string(q));
  std::uint64_t pn = checked_pow(p, N);
  std::uint64_t qn = checked_pow(q, N) % pn;
  return mod_inverse(qn, pn);
}

namespace {

Recovery recover(const PrefixExchange& product, const PrefixExchange& target, std::uint64_t p, int np, std::uint64_t q,
                 int nq) {
  int N = std::max(np, nq);
  std::uint64_t l = reconstruction_exponent(p, q, N);
  u128 e = static_cast<u128>(l) * checked_pow(q, N);
  if (e > (u128{1} << 62)) throw Error(ErrorCode::TooLarge, "reconstruction exponent exceeds 2^62");
  Recovery r;
  r.exponent = static_cast<std::uint64_t>(e);
  r.map = power(product, static_cast<std::int64_t>(r.exponent));
  r.distance = uniform_distance(r.map, target);
  return r;
}

}  // namespace

Recovery reconstruct_factor(const FactorSpec& t, const FactorSpec& u) {
  if (!t.map.support().disjoint(u.map.support())) throw Error(ErrorCode::SupportsOverlap, "factor supports meet");
  if (std::gcd(t.base, u.base) != 1) {
    throw Error(ErrorCode::NotCoprime, std::to_string(t.base) + " and " + std::to_string(u.base));
  }
  return recover(compose(t.map, u.map), t.map, t.base, max_orbit_exponent(t.map, t.base), u.base,
                 max_orbit_exponent(u.map, u.base));
}

std::vector<Recovery> reconstruct_all(const std::vector<FactorSpec>& factors) {
  std::vector<DyadicSet> supports;
  std::vector<int> exps;
  for (const auto& f : factors) {
    supports.push_back(f.map.support());
    exps.push_back(max_orbit_exponent(f.map, f.base));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!supports[i].disjoint(supports[j])) {
        throw Error(ErrorCode::SupportsOverlap, "factors " + std::to_string(i) + " and " + std::to_string(j));
      }
      if (std::gcd(factors[i].base, factors[j].base) != 1) {
        throw Error(ErrorCode::NotCoprime, "factors " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  PrefixExchange product;
  for (const auto& f : factors) product = compose(f.map, product);
  std::vector<Recovery> out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::uint64_t q = 1;
    int nq = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j == k) continue;
      q *= factors[j].base;
      nq = std::max(nq, exps[j]);
    }
    // Orbits of the complementary product divide lcm of the other bases' powers,
    // which divides q^nq.
    out.push_back(recover(product, factors[k].map, factors[k].base, exps[k], q, nq));
  }
  return out;
}

std::vector<FactorSpec> random_commuting_factors(SeededRng& rng, const std::vector<std::uint64_t>& bases, int level) {
  if (level < 1 || level > 20) throw Error(ErrorCode::InvalidArgument, "level must be in 1..20");
  if (bases.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one base");
  std::size_t n = std::size_t{1} << level;
  std::vector<std::uint32_t> pts(n);
  for (std::uint32_t i = 0; i < n; ++i) pts[i] = i;
  rng.shuffle(pts);
  std::vector<std::size_t> cuts{0};
  for (std::size_t k = 1; k < bases.size(); ++k) cuts.push_back(cuts.back() + rng.below(n - cuts.back() + 1));
  cuts.push_back(n);
  std::vector<FactorSpec> out;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k] < 2) throw Error(ErrorCode::InvalidArgument, "bases must be >= 2");
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
    std::size_t i = cuts[k];
    while (i < cuts[k + 1]) {
      std::size_t left = cuts[k + 1] - i;
      std::vector<std::size_t> lengths{1};
      while (lengths.back() * bases[k] <= left) lengths.push_back(lengths.back() * bases[k]);
      std::size_t len = lengths[rng.below(lengths.size())];
      for (std::size_t j = 0; j < len; ++j) img[pts[i + j]] = pts[i + (j + 1) % len];
      i += len;
    }
    out.push_back(FactorSpec{PrefixExchange::from_level_images(level, img), bases[k]});
  }
  return out;
}

}  // namespace cantor
