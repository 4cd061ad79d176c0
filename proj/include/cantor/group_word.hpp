#pragma once

#include <string>
#include <vector>

namespace cantor {

/// Word in the free group on x1..xm. Letter +i is x_i, -i is x_i^{-1} (i >= 1).
struct FreeWord {
  std::vector<int> letters;

  static FreeWord parse(const std::string& text);
  static FreeWord generator(int i, bool inverse = false) { return FreeWord{{inverse ? -i : i}}; }

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  bool is_reduced() const;
  FreeWord reduced() const;
  FreeWord inverse() const;
  /// this followed by o, reduced.
  FreeWord times(const FreeWord& o) const;
  /// "x1 x2^-1", or "1" for the empty word.
  std::string str() const;
  bool operator==(const FreeWord&) const = default;
  auto operator<=>(const FreeWord&) const = default;
};

/// Reduced words of length <= r over m generators, in shortlex order,
/// optionally including the empty word.
std::vector<FreeWord> enumerate_reduced(int m, int r, bool include_empty = false);

}  // namespace cantor
