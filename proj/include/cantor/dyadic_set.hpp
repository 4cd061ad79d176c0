#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

enum class Coverage { Outside, Inside, Mixed };

/// Finite union of cylinders, always stored canonical: sorted, prefix-free
/// and with no sibling pair left unmerged. Equality is therefore syntactic.
class DyadicSet {
 public:
  DyadicSet() = default;

  static DyadicSet canonicalize(std::vector<BinaryWord> words);
  static DyadicSet full() { return DyadicSet(std::vector<BinaryWord>{BinaryWord{}}); }
  static DyadicSet cylinder(const BinaryWord& w) { return DyadicSet(std::vector<BinaryWord>{w}); }
  /// Parses a list such as {"01","10"}.
  static DyadicSet of(const std::vector<std::string>& words);

  const std::vector<BinaryWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool is_full() const { return words_.size() == 1 && words_[0].empty(); }
  /// Longest word length, 0 for the empty set.
  int resolution() const;

  DyadicRational measure() const;

  DyadicSet unite(const DyadicSet& o) const;
  DyadicSet intersect(const DyadicSet& o) const;
  DyadicSet minus(const DyadicSet& o) const;
  DyadicSet complement() const;
  /// Parts of this set lying inside N_w.
  DyadicSet within(const BinaryWord& w) const;

  bool disjoint(const DyadicSet& o) const;
  bool subset_of(const DyadicSet& o) const;
  Coverage coverage(const BinaryWord& w) const;
  bool contains(const BinaryWord& w) const { return coverage(w) == Coverage::Inside; }

  /// All level-L words whose cylinders partition the set.
  std::vector<BinaryWord> refine_to_level(int level) const;

  std::string str() const;
  bool operator==(const DyadicSet&) const = default;

 private:
  explicit DyadicSet(std::vector<BinaryWord> canonical) : words_(std::move(canonical)) {}

  std::vector<BinaryWord> words_;
};

/// Lexicographically first part of a with the given measure, and the rest.
/// Throws InvalidArgument if the measure exceeds measure(a).
std::pair<DyadicSet, DyadicSet> split_front(const DyadicSet& a, const DyadicRational& amount);

/// Merges siblings of a sorted prefix-free list in place.
void merge_siblings(std::vector<BinaryWord>& sorted_prefix_free);

}  // namespace cantor
