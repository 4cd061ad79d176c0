#include "cantor/density.hpp"

#include <mutex>

#include "cantor/error.hpp"
#include "cantor/level_perm.hpp"
#include "cantor/transform.hpp"

namespace cantor {

namespace {

std::vector<kernels::Perm> level_generators(int n) {
  LevelPerm s = LevelPerm::of(finite_odometer(n), n);
  return {s.image, inverse(s).image, LevelPerm::of(transposition_U(n), n).image};
}

void require_small(int n) {
  if (n < 2 || n > 3) throw Error(ErrorCode::TooLarge, "exhaustive search needs 2 <= n <= 3, got " + std::to_string(n));
}

}  // namespace

const KappaResult& kappa_bfs(int n) {
  require_small(n);
  static std::mutex mu;
  static std::map<int, KappaResult> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  KappaResult r;
  r.n = n;
  r.table = kernels::omp::cayley_bfs(1 << n, level_generators(n));
  r.kappa = r.table.eccentricity;
  r.reached = r.table.reached;
  return cache.emplace(n, std::move(r)).first->second;
}

bool generation_check(int n) {
  const KappaResult& r = kappa_bfs(n);
  return r.reached == kernels::factorial(1 << n);
}

std::uint64_t closure_size(int n, const std::vector<PrefixExchange>& gens) {
  require_small(n);
  std::vector<kernels::Perm> perms;
  for (const auto& g : gens) perms.push_back(LevelPerm::of(g, n).image);
  return kernels::serial::cayley_bfs(1 << n, perms).reached;
}

GeneratorPlan plan_sequences(const DyadicRational& epsilon, int K, int L,
                             const std::optional<std::vector<DyadicRational>>& eps_override) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
  GeneratorPlan plan;
  plan.epsilon = epsilon;
  plan.K = K;
  plan.L = L;
  if (K == 0) return plan;
  // n_0 >= 2 and strictly increasing, so n_{K-1} >= K + 1.
  if (2 * K + 1 > L) {
    throw Error(ErrorCode::LevelTooSmall, "K=" + std::to_string(K) + " needs level at least " + std::to_string(2 * K + 1));
  }
  if (eps_override && static_cast<int>(eps_override->size()) < K) {
    throw Error(ErrorCode::InvalidArgument, "eps override shorter than K");
  }
  for (int k = 0; k < K; ++k) plan.eps_seq.push_back(eps_override ? (*eps_override)[k] : DyadicRational::pow2(k + 1));

  DyadicRational used;
  int prev = 1;
  for (int k = 0; k < K; ++k) {
    int chosen = -1;
    for (int n = prev + 1; n <= L - K; ++n) {
      if (k > 0) {
        Rational limit = Rational(plan.eps_seq[k - 1]) / Rational(2 * plan.kappa_table.at(prev));
        if (!(Rational(DyadicRational::pow2(n + 2)) < limit)) continue;
      }
      if (!(used + DyadicRational::pow2(n) < epsilon)) continue;
      chosen = n;
      break;
    }
    if (chosen < 0) {
      throw Error(ErrorCode::LevelTooSmall, "no admissible n_" + std::to_string(k) + " at level " + std::to_string(L));
    }
    if (chosen > 3) {
      throw Error(ErrorCode::KappaUnavailable, "kappa(" + std::to_string(chosen) + ") is not computable");
    }
    plan.kappa_table[chosen] = kappa_bfs(chosen).kappa;
    plan.n_seq.push_back(chosen);
    used += DyadicRational::pow2(chosen);
    prev = chosen;
  }
  for (int k = 0; k < K; ++k) {
    Rational limit = Rational(plan.eps_seq[k]) / Rational(2 * plan.kappa_table.at(plan.n_seq[k]));
    plan.delta_seq.push_back(DyadicRational::largest_pow2_below(limit));
  }
  if (plan.n_seq.back() + K > L) throw Error(ErrorCode::LevelTooSmall, "n_{K-1} + K exceeds level");
  return plan;
}

bool AssembleResult::ledger_ok() const {
  for (const auto& e : ledger) {
    if (!e.pass) return false;
  }
  return true;
}

AssembleResult assemble_U(const GeneratorPlan& plan, const std::vector<DyadicSet>& excluded) {
  AssembleResult out;
  for (int k = 0; k < plan.K; ++k) {
    int n = plan.n_seq[k];
    PrefixExchange un = transposition_U(n);
    PrefixExchange root = root_2p(un, k);
    DyadicSet bbar = k < static_cast<int>(excluded.size()) ? excluded[k] : DyadicSet{};
    if (root.image(bbar) != bbar) {
      throw Error(ErrorCode::NotInvariant, "excluded set " + std::to_string(k) + " is not root-invariant");
    }
    if (!(bbar.measure() < plan.delta_seq[k])) {
      throw Error(ErrorCode::DeltaExceeded, "excluded set " + std::to_string(k) + " has measure " +
                                                bbar.measure().str() + " >= " + plan.delta_seq[k].str());
    }
    DyadicSet kept = un.support().minus(bbar);
    PrefixExchange f = induced(root, kept);
    out.U = compose(f, out.U);
    out.factors.push_back(f);
    out.kept.push_back(kept);
    out.support_measure += kept.measure();
  }
  out.support_ok = plan.K == 0 || out.support_measure < plan.epsilon;
  for (int k = 0; k < plan.K; ++k) {
    LedgerEntry e;
    e.k = k;
    e.n_k = plan.n_seq[k];
    e.distance = uniform_distance(power(out.U, std::int64_t{1} << k), transposition_U(e.n_k));
    e.bound = Rational(plan.eps_seq[k]) / Rational(plan.kappa_table.at(e.n_k));
    e.slack = DyadicRational::pow2(plan.L);
    e.pass = Rational(e.distance + e.slack) < e.bound;
    out.ledger.push_back(e);
  }
  return out;
}

std::string SynthesisResult::word_text() const {
  static const char* names[] = {"T", "T^-1", "U^(2^k)"};
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += names[word[i]];
  }
  return s;
}

namespace {

struct Letters {
  PrefixExchange t, tinv, u;
};

SynthesisResult realize(const kernels::CayleyTable& table, std::uint32_t rank, const PrefixExchange& target,
                        const Letters& letters, const Rational& allowance_base, int L) {
  SynthesisResult r;
  r.word = kernels::word_to(table, rank);
  for (int g : r.word) {
    const PrefixExchange& x = g == 0 ? letters.t : g == 1 ? letters.tinv : letters.u;
    r.realized = compose(x, r.realized);
  }
  r.error = uniform_distance(r.realized, target);
  r.allowance = allowance_base + Rational(DyadicRational::pow2(L) * static_cast<std::int64_t>(r.word.size()));
  r.within = Rational(r.error) < r.allowance;
  return r;
}

Letters letters_for(const GeneratorPlan& plan, const PrefixExchange& U, int k) {
  PrefixExchange t = finite_odometer(plan.L);
  return {t, t.inverse(), power(U, std::int64_t{1} << k)};
}

}  // namespace

SynthesisResult synthesize_word(const PrefixExchange& target, const GeneratorPlan& plan, const PrefixExchange& U,
                                int k) {
  if (k < 0 || k >= plan.K) throw Error(ErrorCode::NoPlanEntry, "no plan entry for k=" + std::to_string(k));
  int n = plan.n_seq[k];
  const KappaResult& kr = kappa_bfs(n);
  std::uint32_t rank = kernels::lehmer_rank(LevelPerm::of(target, n).image);
  return realize(kr.table, rank, target, letters_for(plan, U, k), Rational(plan.eps_seq[k]), plan.L);
}

SynthesisSweep synthesize_all(const GeneratorPlan& plan, const PrefixExchange& U, int k) {
  if (k < 0 || k >= plan.K) throw Error(ErrorCode::NoPlanEntry, "no plan entry for k=" + std::to_string(k));
  int n = plan.n_seq[k];
  const KappaResult& kr = kappa_bfs(n);
  Letters letters = letters_for(plan, U, k);
  auto total = static_cast<std::int64_t>(kernels::factorial(1 << n));
  std::vector<SynthesisResult> results(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < total; ++r) {
    LevelPerm p{n, kernels::lehmer_unrank(static_cast<std::uint32_t>(r), 1 << n)};
    results[static_cast<std::size_t>(r)] =
        realize(kr.table, static_cast<std::uint32_t>(r), p.to_exchange(), letters, Rational(plan.eps_seq[k]), plan.L);
  }
  SynthesisSweep s;
  s.targets = static_cast<std::uint64_t>(total);
  s.allowance = Rational(plan.eps_seq[k]) + Rational(DyadicRational::pow2(plan.L) * static_cast<std::int64_t>(kr.kappa));
  for (const auto& r : results) {
    if (r.within) ++s.within;
    if (r.error > s.max_error) s.max_error = r.error;
  }
  return s;
}

}  // namespace cantor
