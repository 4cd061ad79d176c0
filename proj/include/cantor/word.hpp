#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cantor {

/// Finite binary word naming the cylinder N_s. Bits are stored left-aligned:
/// coordinate 0 sits in bit 63, so comparing (bits, length) is the
/// lexicographic order with a prefix sorting before its extensions.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 60;

  constexpr BinaryWord() = default;

  /// Accepts "" or "e" for the empty word, otherwise a string over {0,1}.
  static BinaryWord parse(std::string_view text);
  /// Word of length len whose bits, read left to right, spell index in binary
  /// (coordinate 0 is the most significant bit).
  static BinaryWord from_index(std::uint64_t index, int len);
  static BinaryWord repeat(bool bit, int n);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  bool bit(int i) const { return (bits_ >> (63 - i)) & 1U; }
  std::uint64_t raw() const { return bits_; }
  std::uint64_t index() const { return len_ == 0 ? 0 : bits_ >> (64 - len_); }

  BinaryWord append(bool b) const;
  BinaryWord concat(const BinaryWord& tail) const;
  BinaryWord prefix(int n) const;
  /// Drops the first n coordinates.
  BinaryWord drop(int n) const;
  BinaryWord parent() const { return prefix(len_ - 1); }
  BinaryWord sibling() const;
  bool is_prefix_of(const BinaryWord& w) const;
  bool comparable(const BinaryWord& w) const { return is_prefix_of(w) || w.is_prefix_of(*this); }
  /// Replaces the leading |from| coordinates (which must equal from) by to.
  BinaryWord replace_prefix(const BinaryWord& from, const BinaryWord& to) const;

  std::string str() const;

  bool operator==(const BinaryWord&) const = default;
  std::strong_ordering operator<=>(const BinaryWord& o) const {
    if (auto c = bits_ <=> o.bits_; c != 0) return c;
    return len_ <=> o.len_;
  }

 private:
  constexpr BinaryWord(std::uint64_t bits, int len) : bits_(bits), len_(static_cast<std::uint8_t>(len)) {}

  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

struct BinaryWordHash {
  std::size_t operator()(const BinaryWord& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.raw() ^ (static_cast<std::uint64_t>(w.length()) * 0x9E3779B97F4A7C15ULL));
  }
};

}  // namespace cantor
