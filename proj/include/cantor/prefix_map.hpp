#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor/dyadic_set.hpp"

namespace cantor {

/// One prefix replacement src⌢x -> dst⌢x; |src| == |dst|.
struct Pair {
  BinaryWord src;
  BinaryWord dst;
  bool operator==(const Pair&) const = default;
};

using PairList = std::vector<Pair>;
using StringPairs = std::vector<std::pair<std::string, std::string>>;

namespace detail {

/// Sorted-by-source pair table shared by exchanges and partial isos.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(PairList sorted) : pairs_(std::move(sorted)) {}

  const PairList& pairs() const { return pairs_; }
  /// Pair whose source is a prefix of w, if any.
  const Pair* covering(const BinaryWord& w) const;
  /// True if some source strictly extends w.
  bool has_finer(const BinaryWord& w) const;
  /// Splits N_w into pieces on which the table acts by a single replacement.
  /// Parts of N_w not covered by any source are emitted as u -> u when
  /// fill_identity is set and skipped otherwise.
  void pieces(const BinaryWord& w, bool fill_identity, PairList& out) const;
  int resolution() const;
  bool operator==(const PairTable&) const = default;

 private:
  void pieces_rec(const BinaryWord& u, std::size_t lo, std::size_t hi, bool fill_identity, PairList& out) const;

  PairList pairs_;
};

}  // namespace detail

class PartialDyadicIso;

/// Measure-preserving bijection of the Cantor space acting by finitely many
/// prefix swaps and by the identity elsewhere. Stored canonical: identity
/// pairs stripped, sibling pairs merged, sorted by source.
class PrefixExchange {
 public:
  PrefixExchange() = default;

  /// Validates and canonicalizes. Throws NotBijective if sources or targets
  /// overlap or do not cover the same set, InvalidArgument on length mismatch.
  static PrefixExchange from_pairs(PairList pairs);
  static PrefixExchange from_strings(const StringPairs& pairs);
  /// Dense level-n permutation: image[i] is the index of the image of word i.
  static PrefixExchange from_level_images(int level, const std::vector<std::uint32_t>& image);

  const PairList& pairs() const { return table_.pairs(); }
  bool is_identity() const { return table_.pairs().empty(); }
  /// Longest pair length (0 for the identity).
  int resolution() const { return table_.resolution(); }

  /// Image of a point named by w; throws InsufficientResolution when w is
  /// shorter than a pair that could apply to it.
  BinaryWord apply(const BinaryWord& w) const;
  /// Pieces of the action on N_w (identity parts included).
  PairList pieces(const BinaryWord& w) const;
  PrefixExchange inverse() const;
  DyadicSet support() const;
  DyadicSet image(const DyadicSet& a) const;
  /// This map restricted to a (as a partial iso with domain a).
  PartialDyadicIso restrict_to(const DyadicSet& a) const;

  std::string str() const;
  bool operator==(const PrefixExchange&) const = default;

 private:
  explicit PrefixExchange(detail::PairTable t) : table_(std::move(t)) {}
  detail::PairTable table_;
};

/// Partial isomorphism with domain the union of sources and range the union
/// of targets. Identity pairs are kept: they carry domain information.
class PartialDyadicIso {
 public:
  PartialDyadicIso() = default;

  static PartialDyadicIso from_pairs(PairList pairs);
  static PartialDyadicIso from_strings(const StringPairs& pairs);
  /// Identity on a.
  static PartialDyadicIso identity_on(const DyadicSet& a);

  const PairList& pairs() const { return table_.pairs(); }
  bool empty() const { return table_.pairs().empty(); }
  int resolution() const { return table_.resolution(); }
  DyadicSet domain() const;
  DyadicSet range() const;
  DyadicRational measure() const { return domain().measure(); }

  /// nullopt when w lies outside the domain; throws InsufficientResolution
  /// if w straddles the domain boundary.
  std::optional<BinaryWord> apply(const BinaryWord& w) const;
  PartialDyadicIso inverse() const;
  PartialDyadicIso restrict_to(const DyadicSet& a) const;
  DyadicSet image(const DyadicSet& a) const;
  /// Pieces of the action on N_w ∩ domain.
  PairList pieces(const BinaryWord& w) const;

  std::string str() const;
  bool operator==(const PartialDyadicIso&) const = default;

 private:
  explicit PartialDyadicIso(detail::PairTable t) : table_(std::move(t)) {}
  detail::PairTable table_;
};

/// x -> t(s(x)).
PrefixExchange compose(const PrefixExchange& t, const PrefixExchange& s);
/// x -> t(s(x)) on s^{-1}(dom t ∩ rng s).
PartialDyadicIso compose(const PartialDyadicIso& t, const PartialDyadicIso& s);
/// Union of partial isos with disjoint domains and disjoint ranges; throws
/// NotBijective unless the result extends to an exchange (domain == range).
PrefixExchange glue(const std::vector<PartialDyadicIso>& parts);
/// Union of partial isos with disjoint domains and ranges.
PartialDyadicIso merge(const std::vector<PartialDyadicIso>& parts);

}  // namespace cantor
