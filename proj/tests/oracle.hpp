#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cantor/kernels.hpp"
#include "cantor/prefix_map.hpp"
#include "cantor/rng.hpp"

namespace oracle {

using cantor::kernels::Perm;

/// Image table of t on level-`level` words, built point by point.
inline Perm table(const cantor::PrefixExchange& t, int level) {
  Perm out(std::size_t{1} << level);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(t.apply(cantor::BinaryWord::from_index(i, level)).index());
  }
  return out;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline Perm random_perm(cantor::SeededRng& rng, std::size_t n) {
  Perm p = identity(n);
  rng.shuffle(p);
  return p;
}

/// a after b.
inline Perm after(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

/// +1 with carry on a word read least significant digit first.
inline std::string odometer_step(std::string w) {
  for (char& c : w) {
    if (c == '0') {
      c = '1';
      return w;
    }
    c = '0';
  }
  return w;
}

/// Bitmap of the level-`level` words lying in a set of cylinders.
inline std::vector<char> bitmap(const std::vector<std::string>& words, int level) {
  std::vector<char> out(std::size_t{1} << level, 0);
  for (const auto& w : words) {
    std::uint64_t base = 0;
    for (char c : w) base = base * 2 + static_cast<std::uint64_t>(c - '0');
    int extra = level - static_cast<int>(w.size());
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << extra); ++t) out[(base << extra) | t] = 1;
  }
  return out;
}

}  // namespace oracle

#include <optional>

#include "cantor/error.hpp"

namespace oracle {

/// Error code thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<cantor::ErrorCode> thrown(F&& f) {
  try {
    f();
  } catch (const cantor::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle
