#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cantor {

class Rational;

/// Exact value numerator / 2^exponent, kept canonical (numerator odd, or the
/// pair (0, 0)). Every measure and uniform distance in the library is one of
/// these.
class DyadicRational {
 public:
  static constexpr int kMaxExponent = 62;

  constexpr DyadicRational() = default;
  DyadicRational(std::int64_t numerator, int exponent);

  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return {1, 0}; }
  /// 2^-k
  static DyadicRational pow2(int k);
  /// Largest dyadic with denominator 2^level that is <= x.
  static DyadicRational floor_at(const Rational& x, int level);
  /// Smallest dyadic with denominator 2^level that is >= x.
  static DyadicRational ceil_at(const Rational& x, int level);
  /// Largest power of two 2^-j (j >= 0) strictly below x; x must be positive.
  static DyadicRational largest_pow2_below(const Rational& x);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  /// Numerator of this value written over 2^level (level >= exponent()).
  std::int64_t scaled_to(int level) const;

  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  DyadicRational operator*(std::int64_t k) const;
  DyadicRational operator*(const DyadicRational& o) const;
  DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
  DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }
  /// Exact division by 2^k.
  DyadicRational halved(int k = 1) const;

  bool operator==(const DyadicRational&) const = default;
  std::strong_ordering operator<=>(const DyadicRational& o) const;

  double to_double() const;
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// General exact rational (int64 numerator / positive denominator, reduced).
/// Used where the bounds leave the dyadic world, e.g. eps_k / kappa(n).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);
  Rational(const DyadicRational& d);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;
  /// Parses "a/b", "a" or a finite decimal such as "0.25".
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cantor
