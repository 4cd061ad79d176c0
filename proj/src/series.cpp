#include "cantor/series.hpp"

#include <cstdlib>

#include "cantor/error.hpp"

namespace cantor {

std::size_t TruncatedSeries::offset(int degree) const {
  std::size_t off = 0, pw = 1;
  for (int k = 0; k < degree; ++k) {
    off += pw;
    pw *= static_cast<std::size_t>(m_);
  }
  return off;
}

TruncatedSeries TruncatedSeries::one(int q, int m, int d) {
  if (q < 2 || m < 1 || d < 0) throw Error(ErrorCode::InvalidArgument, "series needs q >= 2, m >= 1, d >= 0");
  TruncatedSeries s;
  s.q_ = q;
  s.m_ = m;
  s.d_ = d;
  s.c_.assign(s.offset(d + 1), 0);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(int i, int q, int m, int d) {
  if (i < 1 || i > m) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  TruncatedSeries s = one(q, m, d);
  if (d >= 1) s.c_[1 + static_cast<std::size_t>(i - 1)] = 1;
  return s;
}

std::uint32_t TruncatedSeries::coefficient(const std::vector<int>& vars) const {
  int k = static_cast<int>(vars.size());
  if (k > d_) return 0;
  std::size_t rank = 0;
  for (int v : vars) rank = rank * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v - 1);
  return c_[offset(k) + rank];
}

bool TruncatedSeries::is_one() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i]) return false;
  }
  return !c_.empty() && c_[0] == 1;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (q_ != o.q_ || m_ != o.m_ || d_ != o.d_) throw Error(ErrorCode::InvalidArgument, "series shapes differ");
  TruncatedSeries r = *this;
  std::fill(r.c_.begin(), r.c_.end(), 0);
  std::vector<std::uint64_t> acc(c_.size(), 0);
  std::vector<std::size_t> off(static_cast<std::size_t>(d_) + 2), pw(static_cast<std::size_t>(d_) + 1);
  for (int k = 0; k <= d_ + 1; ++k) off[static_cast<std::size_t>(k)] = offset(k);
  pw[0] = 1;
  for (int k = 1; k <= d_; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * static_cast<std::size_t>(m_);
  for (int i = 0; i <= d_; ++i) {
    for (std::size_t a = 0; a < pw[static_cast<std::size_t>(i)]; ++a) {
      std::uint64_t ca = c_[off[static_cast<std::size_t>(i)] + a];
      if (!ca) continue;
      for (int j = 0; i + j <= d_; ++j) {
        std::size_t base = off[static_cast<std::size_t>(i + j)] + a * pw[static_cast<std::size_t>(j)];
        for (std::size_t b = 0; b < pw[static_cast<std::size_t>(j)]; ++b) {
          std::uint64_t cb = o.c_[off[static_cast<std::size_t>(j)] + b];
          if (cb) acc[base + b] = (acc[base + b] + ca * cb) % static_cast<std::uint64_t>(q_);
        }
      }
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || c_[0] != 1) throw Error(ErrorCode::InvalidArgument, "constant term must be 1");
  TruncatedSeries neg = *this;
  neg.c_[0] = 0;
  for (std::size_t i = 1; i < neg.c_.size(); ++i) neg.c_[i] = (static_cast<std::uint32_t>(q_) - neg.c_[i]) % static_cast<std::uint32_t>(q_);
  TruncatedSeries sum = one(q_, m_, d_);
  TruncatedSeries term = one(q_, m_, d_);
  for (int k = 1; k <= d_; ++k) {
    term = term * neg;
    for (std::size_t i = 0; i < sum.c_.size(); ++i) sum.c_[i] = (sum.c_[i] + term.c_[i]) % static_cast<std::uint32_t>(q_);
  }
  return sum;
}

std::string TruncatedSeries::str() const {
  std::string s;
  for (int k = 0; k <= d_; ++k) {
    std::size_t count = offset(k + 1) - offset(k);
    for (std::size_t r = 0; r < count; ++r) {
      std::uint32_t c = c_[offset(k) + r];
      if (!c) continue;
      std::string mono;
      std::size_t x = r;
      std::vector<int> vars(static_cast<std::size_t>(k));
      for (int t = k - 1; t >= 0; --t) {
        vars[static_cast<std::size_t>(t)] = static_cast<int>(x % static_cast<std::size_t>(m_)) + 1;
        x /= static_cast<std::size_t>(m_);
      }
      for (int v : vars) mono += "X" + std::to_string(v);
      if (!s.empty()) s += " + ";
      s += (c == 1 && k > 0) ? mono : std::to_string(c) + mono;
    }
  }
  return s.empty() ? "0" : s;
}

TruncatedSeries magnus_image(const FreeWord& w, int q, int m, int d) {
  TruncatedSeries r = TruncatedSeries::one(q, m, d);
  for (int a : w.letters) {
    int i = std::abs(a);
    if (i > m) throw Error(ErrorCode::InvalidArgument, "letter x" + std::to_string(i) + " exceeds m");
    TruncatedSeries g = TruncatedSeries::generator(i, q, m, d);
    r = r * (a > 0 ? g : g.inverse());
  }
  return r;
}

}  // namespace cantor
