#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/group_word.hpp"

namespace cantor {

/// Element of the truncated non-commutative power series algebra over Z/q in
/// X_1..X_m, degrees <= d. Coefficients are stored densely: monomial
/// X_{i_1}..X_{i_k} sits at offset(k) + base-m rank of (i_1-1, .., i_k-1).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  static TruncatedSeries one(int q, int m, int d);
  /// 1 + X_i.
  static TruncatedSeries generator(int i, int q, int m, int d);

  int q() const { return q_; }
  int m() const { return m_; }
  int d() const { return d_; }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  /// Coefficient of the monomial X_{vars[0]}..X_{vars[k-1]} (1-based vars).
  std::uint32_t coefficient(const std::vector<int>& vars) const;
  bool is_one() const;

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  /// Inverse of 1 + N is the finite sum of (-N)^k.
  TruncatedSeries inverse() const;
  std::string str() const;
  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::size_t offset(int degree) const;
  int q_ = 0, m_ = 0, d_ = 0;
  std::vector<std::uint32_t> c_;
};

/// x_i -> 1 + X_i, x_i^{-1} -> its truncated inverse, multiplied left to right.
TruncatedSeries magnus_image(const FreeWord& w, int q, int m, int d);

}  // namespace cantor
