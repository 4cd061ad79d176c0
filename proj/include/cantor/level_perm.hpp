#pragma once

#include "cantor/kernels.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

/// Dense table of an exchange acting on level-`level` words (index = word
/// read as a binary number, coordinate 0 most significant).
struct LevelPerm {
  int level = 0;
  kernels::Perm image;

  static LevelPerm identity(int level);
  static LevelPerm of(const PrefixExchange& t, int level);
  PrefixExchange to_exchange() const { return PrefixExchange::from_level_images(level, image); }
  bool operator==(const LevelPerm&) const = default;
};

/// a after b.
LevelPerm compose(const LevelPerm& a, const LevelPerm& b);
LevelPerm inverse(const LevelPerm& a);
/// d_u of two level tables: disagreement count over 2^level.
DyadicRational uniform_distance(const LevelPerm& a, const LevelPerm& b);

}  // namespace cantor
