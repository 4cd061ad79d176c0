#include "cantor/word.hpp"

#include "cantor/error.hpp"

namespace cantor {

namespace {

std::uint64_t mask(int len) { return len == 0 ? 0 : ~std::uint64_t{0} << (64 - len); }

void check_length(int len) {
  if (len < 0 || len > BinaryWord::kMaxLength) {
    throw Error(ErrorCode::TooLarge, "word length " + std::to_string(len) + " outside [0, 60]");
  }
}

}  // namespace

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text == "e") return {};
  check_length(static_cast<int>(text.size()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << (63 - i);
    } else if (text[i] != '0') {
      throw Error(ErrorCode::InvalidArgument, "not a binary word: '" + std::string(text) + "'");
    }
  }
  return {bits, static_cast<int>(text.size())};
}

BinaryWord BinaryWord::from_index(std::uint64_t index, int len) {
  check_length(len);
  if (len == 0) return {};
  return {index << (64 - len), len};
}

BinaryWord BinaryWord::repeat(bool bit, int n) {
  check_length(n);
  return {bit ? mask(n) : 0, n};
}

BinaryWord BinaryWord::append(bool b) const {
  check_length(len_ + 1);
  std::uint64_t bits = bits_;
  if (b) bits |= std::uint64_t{1} << (63 - len_);
  return {bits, len_ + 1};
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
  check_length(len_ + tail.len_);
  return {bits_ | (len_ == 0 ? tail.bits_ : tail.bits_ >> len_), len_ + tail.len_};
}

BinaryWord BinaryWord::prefix(int n) const {
  if (n < 0 || n > len_) throw Error(ErrorCode::InvalidArgument, "prefix length out of range");
  return {bits_ & mask(n), n};
}

BinaryWord BinaryWord::drop(int n) const {
  if (n < 0 || n > len_) throw Error(ErrorCode::InvalidArgument, "drop length out of range");
  if (n == 64) return {};
  return {n == 0 ? bits_ : bits_ << n, len_ - n};
}

BinaryWord BinaryWord::sibling() const {
  if (len_ == 0) throw Error(ErrorCode::InvalidArgument, "empty word has no sibling");
  return {bits_ ^ (std::uint64_t{1} << (64 - len_)), len_};
}

bool BinaryWord::is_prefix_of(const BinaryWord& w) const {
  return len_ <= w.len_ && (w.bits_ & mask(len_)) == bits_;
}

BinaryWord BinaryWord::replace_prefix(const BinaryWord& from, const BinaryWord& to) const {
  if (!from.is_prefix_of(*this) || from.len_ != to.len_) {
    throw Error(ErrorCode::InvalidArgument, "replace_prefix: " + from.str() + " is not a prefix of " + str());
  }
  return {(bits_ & ~mask(from.len_)) | to.bits_, len_};
}

std::string BinaryWord::str() const {
  std::string out(len_, '0');
  for (int i = 0; i < len_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

}  // namespace cantor
