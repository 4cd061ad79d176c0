#include "cantor/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorCode::TooLarge, std::string("integer overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

DyadicRational::DyadicRational(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exponent < 0) {
    throw Error(ErrorCode::InvalidArgument, "dyadic exponent must be non-negative");
  }
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ % 2 == 0)) {
    num_ /= 2;
    --exp_;
  }
  if (exp_ > kMaxExponent) {
    throw Error(ErrorCode::TooLarge, "dyadic exponent exceeds " + std::to_string(kMaxExponent));
  }
}

DyadicRational DyadicRational::pow2(int k) {
  if (k < 0) return DyadicRational(std::int64_t{1} << (-k), 0);
  return DyadicRational(1, k);
}

DyadicRational DyadicRational::floor_at(const Rational& x, int level) {
  i128 scaled = static_cast<i128>(x.num()) << level;
  return DyadicRational(narrow(floor_div(scaled, x.den()), "floor_at"), level);
}

DyadicRational DyadicRational::ceil_at(const Rational& x, int level) {
  i128 scaled = static_cast<i128>(x.num()) << level;
  i128 q = floor_div(scaled, x.den());
  if (q * x.den() != scaled) ++q;
  return DyadicRational(narrow(q, "ceil_at"), level);
}

DyadicRational DyadicRational::largest_pow2_below(const Rational& x) {
  if (x <= Rational(0)) {
    throw Error(ErrorCode::InvalidArgument, "largest_pow2_below needs a positive bound");
  }
  for (int j = 0; j <= kMaxExponent; ++j) {
    DyadicRational candidate = pow2(j);
    if (Rational(candidate) < x) return candidate;
  }
  throw Error(ErrorCode::TooLarge, "bound below 2^-62");
}

std::int64_t DyadicRational::scaled_to(int level) const {
  if (level < exp_) {
    throw Error(ErrorCode::InvalidArgument, "cannot scale dyadic to a coarser level");
  }
  return narrow(static_cast<i128>(num_) << (level - exp_), "scaled_to");
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  int e = std::max(exp_, o.exp_);
  i128 a = static_cast<i128>(num_) << (e - exp_);
  i128 b = static_cast<i128>(o.num_) << (e - o.exp_);
  return DyadicRational(narrow(a + b, "dyadic add"), e);
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  int e = std::max(exp_, o.exp_);
  i128 a = static_cast<i128>(num_) << (e - exp_);
  i128 b = static_cast<i128>(o.num_) << (e - o.exp_);
  return DyadicRational(narrow(a - b, "dyadic sub"), e);
}

DyadicRational DyadicRational::operator*(std::int64_t k) const {
  return DyadicRational(narrow(static_cast<i128>(num_) * k, "dyadic scale"), exp_);
}

DyadicRational DyadicRational::operator*(const DyadicRational& o) const {
  return DyadicRational(narrow(static_cast<i128>(num_) * o.num_, "dyadic mul"), exp_ + o.exp_);
}

DyadicRational DyadicRational::halved(int k) const { return DyadicRational(num_, exp_ + k); }

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
  int e = std::max(exp_, o.exp_);
  i128 a = static_cast<i128>(num_) << (e - exp_);
  i128 b = static_cast<i128>(o.num_) << (e - o.exp_);
  return a <=> b;
}

double DyadicRational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::uint64_t{1} << exp_);
}

std::string DyadicRational::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n, "rational");
  den_ = narrow(d, "rational");
}

Rational::Rational(const DyadicRational& d) {
  num_ = d.numerator();
  den_ = narrow(i128{1} << d.exponent(), "rational from dyadic");
}

namespace {

Rational make(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n, "rational"), narrow(d, "rational"));
}

}  // namespace

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return static_cast<i128>(num_) * o.den_ <=> static_cast<i128>(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "cannot parse rational '" + text + "'"); };
  if (text.empty()) throw bad();
  char* end = nullptr;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    long long n = std::strtoll(a.c_str(), &end, 10);
    if (a.empty() || *end != '\0') throw bad();
    long long d = std::strtoll(b.c_str(), &end, 10);
    if (b.empty() || *end != '\0' || d == 0) throw bad();
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17) throw bad();
    for (char c : frac) {
      if (c < '0' || c > '9') throw bad();
    }
    bool negative = !whole.empty() && whole[0] == '-';
    long long w = whole.empty() || whole == "-" ? 0 : std::strtoll(whole.c_str(), &end, 10);
    if (!whole.empty() && whole != "-" && *end != '\0') throw bad();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t f = std::strtoll(frac.c_str(), nullptr, 10);
    Rational r = Rational(w) + Rational(negative ? -f : f, scale);
    return r;
  }
  long long n = std::strtoll(text.c_str(), &end, 10);
  if (*end != '\0') throw bad();
  return Rational(n);
}

}  // namespace cantor
