#include "cantor/level_perm.hpp"

#include <numeric>

#include "cantor/error.hpp"

namespace cantor {

namespace {
constexpr int kMaxDenseLevel = 26;
constexpr std::size_t kParallelThreshold = 1u << 14;

void check_level(int level) {
  if (level < 0 || level > kMaxDenseLevel) {
    throw Error(ErrorCode::TooLarge, "dense tables are limited to level " + std::to_string(kMaxDenseLevel));
  }
}
}  // namespace

LevelPerm LevelPerm::identity(int level) {
  check_level(level);
  LevelPerm p{level, kernels::Perm(std::size_t{1} << level)};
  std::iota(p.image.begin(), p.image.end(), 0U);
  return p;
}

LevelPerm LevelPerm::of(const PrefixExchange& t, int level) {
  check_level(level);
  if (t.resolution() > level) {
    throw Error(ErrorCode::InsufficientResolution,
                "map resolution " + std::to_string(t.resolution()) + " exceeds level " + std::to_string(level));
  }
  LevelPerm p = identity(level);
  for (const Pair& pr : t.pairs()) {
    int extra = level - pr.src.length();
    std::uint64_t s = pr.src.index() << extra;
    std::uint64_t d = pr.dst.index() << extra;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << extra); ++x) p.image[s | x] = static_cast<std::uint32_t>(d | x);
  }
  return p;
}

LevelPerm compose(const LevelPerm& a, const LevelPerm& b) {
  if (a.level != b.level) throw Error(ErrorCode::InvalidArgument, "level mismatch");
  auto img = a.image.size() >= kParallelThreshold ? kernels::omp::compose(a.image, b.image)
                                                  : kernels::serial::compose(a.image, b.image);
  return {a.level, std::move(img)};
}

LevelPerm inverse(const LevelPerm& a) {
  auto img = a.image.size() >= kParallelThreshold ? kernels::omp::invert(a.image) : kernels::serial::invert(a.image);
  return {a.level, std::move(img)};
}

DyadicRational uniform_distance(const LevelPerm& a, const LevelPerm& b) {
  if (a.level != b.level) throw Error(ErrorCode::InvalidArgument, "level mismatch");
  std::uint64_t c = a.image.size() >= kParallelThreshold ? kernels::omp::disagreement(a.image, b.image)
                                                         : kernels::serial::disagreement(a.image, b.image);
  return DyadicRational(static_cast<std::int64_t>(c), a.level);
}

}  // namespace cantor
