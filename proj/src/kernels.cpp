#include "cantor/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include <omp.h>

#include "cantor/error.hpp"

namespace cantor::kernels {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint32_t lehmer_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::uint32_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    std::uint32_t below = static_cast<std::uint32_t>(std::popcount(used & ((1U << p[i]) - 1)));
    rank = rank * static_cast<std::uint32_t>(n - i) + (p[i] - below);
    used |= 1U << p[i];
  }
  return rank;
}

Perm lehmer_unrank(std::uint32_t rank, int points) {
  std::vector<std::uint32_t> digits(points);
  for (int i = points - 1; i >= 0; --i) {
    std::uint32_t base = static_cast<std::uint32_t>(points - i);
    digits[i] = rank % base;
    rank /= base;
  }
  std::vector<std::uint32_t> free(points);
  std::iota(free.begin(), free.end(), 0U);
  Perm p(points);
  for (int i = 0; i < points; ++i) {
    p[i] = free[digits[i]];
    free.erase(free.begin() + digits[i]);
  }
  return p;
}

namespace {

void check_bfs_input(int points, const std::vector<Perm>& gens) {
  if (points < 1 || points > 10) throw Error(ErrorCode::TooLarge, "Cayley search limited to 10 points");
  if (gens.size() > 127) throw Error(ErrorCode::InvalidArgument, "too many generators");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != points) throw Error(ErrorCode::InvalidArgument, "generator size mismatch");
  }
}

// y = g after x on rank-coded elements.
std::uint32_t step(const Perm& g, std::uint32_t x_rank, int points) {
  Perm x = lehmer_unrank(x_rank, points);
  for (auto& v : x) v = g[v];
  return lehmer_rank(x);
}

// Canonical parent: the first generator g with dist[g^{-1} y] == d.
void assign_parents(CayleyTable& t, const std::vector<Perm>& inverses, const std::vector<std::uint32_t>& layer,
                    std::int8_t d, bool parallel) {
  const std::int64_t n = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint32_t y = layer[static_cast<std::size_t>(i)];
    for (std::size_t g = 0; g < inverses.size(); ++g) {
      if (t.dist[step(inverses[g], y, t.points)] == d) {
        t.parent_gen[y] = static_cast<std::int8_t>(g);
        break;
      }
    }
  }
}

CayleyTable bfs_impl(int points, const std::vector<Perm>& gens, bool parallel) {
  check_bfs_input(points, gens);
  CayleyTable t;
  t.points = points;
  t.gens = gens;
  const std::uint64_t total = factorial(points);
  t.dist.assign(total, -1);
  t.parent_gen.assign(total, -1);
  std::vector<Perm> inverses;
  for (const auto& g : gens) inverses.push_back(serial::invert(g));

  Perm id(points);
  std::iota(id.begin(), id.end(), 0U);
  std::uint32_t root = lehmer_rank(id);
  t.dist[root] = 0;
  std::vector<std::uint32_t> frontier{root};
  std::int8_t d = 0;
  t.reached = 1;
  while (!frontier.empty()) {
    if (d == 126) throw Error(ErrorCode::TooLarge, "Cayley graph diameter exceeds 126");
    const std::int64_t n = static_cast<std::int64_t>(frontier.size());
    const std::int8_t next = static_cast<std::int8_t>(d + 1);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
      for (const auto& g : gens) {
        std::uint32_t y = step(g, frontier[static_cast<std::size_t>(i)], points);
        std::atomic_ref<std::int8_t> slot(t.dist[y]);
        std::int8_t expected = -1;
        slot.compare_exchange_strong(expected, next, std::memory_order_relaxed);
      }
    }
    std::vector<std::uint32_t> layer;
    for (std::uint64_t r = 0; r < total; ++r) {
      if (t.dist[r] == next) layer.push_back(static_cast<std::uint32_t>(r));
    }
    if (layer.empty()) break;
    assign_parents(t, inverses, layer, d, parallel);
    t.reached += layer.size();
    t.eccentricity = static_cast<std::uint32_t>(next);
    frontier = std::move(layer);
    d = next;
  }
  return t;
}

}  // namespace

namespace serial {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::uint64_t disagreement(const Perm& a, const Perm& b) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
  return c;
}

std::vector<std::uint32_t> orbit_lengths(const Perm& a) {
  std::vector<std::uint32_t> len(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (len[i]) continue;
    std::uint32_t l = 0;
    std::size_t x = i;
    do {
      ++l;
      x = a[x];
    } while (x != i);
    x = i;
    do {
      len[x] = l;
      x = a[x];
    } while (x != i);
  }
  return len;
}

CayleyTable cayley_bfs(int points, const std::vector<Perm>& gens) { return bfs_impl(points, gens, false); }

}  // namespace serial

namespace omp {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  const std::int64_t n = static_cast<std::int64_t>(b.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = a[b[i]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::uint64_t disagreement(const Perm& a, const Perm& b) {
  std::uint64_t c = 0;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for reduction(+ : c) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) c += a[i] != b[i];
  return c;
}

std::vector<std::uint32_t> orbit_lengths(const Perm& a) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  Perm jump = a;
  std::vector<std::uint32_t> label(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) label[i] = std::min<std::uint32_t>(static_cast<std::uint32_t>(i), a[i]);
  // After k rounds label[i] is the minimum over the next 2^k points of the cycle.
  for (std::int64_t span = 1; span < n; span *= 2) {
    Perm next_jump(a.size());
    std::vector<std::uint32_t> next_label(a.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      next_label[i] = std::min(label[i], label[jump[i]]);
      next_jump[i] = jump[jump[i]];
    }
    jump.swap(next_jump);
    label.swap(next_label);
  }
  std::vector<std::uint32_t> count(a.size(), 0);
  for (std::int64_t i = 0; i < n; ++i) ++count[label[i]];
  std::vector<std::uint32_t> len(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) len[i] = count[label[i]];
  return len;
}

CayleyTable cayley_bfs(int points, const std::vector<Perm>& gens) { return bfs_impl(points, gens, true); }

}  // namespace omp

std::vector<int> word_to(const CayleyTable& table, std::uint32_t rank) {
  if (table.dist.at(rank) < 0) throw Error(ErrorCode::InvalidArgument, "element not reached by the search");
  std::vector<int> word;
  std::uint32_t y = rank;
  while (table.parent_gen[y] >= 0) {
    int g = table.parent_gen[y];
    word.push_back(g);
    y = step(serial::invert(table.gens[static_cast<std::size_t>(g)]), y, table.points);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace cantor::kernels
