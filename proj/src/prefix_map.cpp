#include "cantor/prefix_map.hpp"

#include <algorithm>

#include "cantor/error.hpp"

namespace cantor {

namespace {

bool src_less(const Pair& a, const Pair& b) { return a.src < b.src; }

void check_prefix_free(std::vector<BinaryWord> words, const char* what) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i - 1].is_prefix_of(words[i])) {
      throw Error(ErrorCode::NotBijective,
                  std::string(what) + " overlap: " + words[i - 1].str() + " and " + words[i].str());
    }
  }
}

bool last_bit_zero(const BinaryWord& w) { return !w.bit(w.length() - 1); }

PairList canonical_pairs(PairList pairs, bool strip_identity) {
  for (const Pair& p : pairs) {
    if (p.src.length() != p.dst.length()) {
      throw Error(ErrorCode::InvalidArgument, "pair " + p.src.str() + "->" + p.dst.str() + " has unequal lengths");
    }
  }
  if (strip_identity) {
    std::erase_if(pairs, [](const Pair& p) { return p.src == p.dst; });
  }
  std::sort(pairs.begin(), pairs.end(), src_less);
  {
    std::vector<BinaryWord> srcs, dsts;
    srcs.reserve(pairs.size());
    dsts.reserve(pairs.size());
    for (const Pair& p : pairs) {
      srcs.push_back(p.src);
      dsts.push_back(p.dst);
    }
    check_prefix_free(std::move(srcs), "sources");
    check_prefix_free(std::move(dsts), "targets");
  }
  PairList stack;
  stack.reserve(pairs.size());
  for (const Pair& p : pairs) {
    stack.push_back(p);
    while (stack.size() >= 2) {
      const Pair& b = stack[stack.size() - 1];
      const Pair& a = stack[stack.size() - 2];
      if (a.src.empty() || a.src.length() != b.src.length()) break;
      if (b.src != a.src.sibling() || !last_bit_zero(a.src)) break;
      if (b.dst != a.dst.sibling() || !last_bit_zero(a.dst)) break;
      Pair parent{a.src.parent(), a.dst.parent()};
      stack.pop_back();
      stack.back() = parent;
    }
  }
  return stack;
}

PairList parse_pairs(const StringPairs& pairs) {
  PairList out;
  out.reserve(pairs.size());
  for (const auto& [s, t] : pairs) out.push_back({BinaryWord::parse(s), BinaryWord::parse(t)});
  return out;
}

std::string pairs_str(const PairList& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += (pairs[i].src.empty() ? "e" : pairs[i].src.str()) + "->" + (pairs[i].dst.empty() ? "e" : pairs[i].dst.str());
  }
  return out + "}";
}

}  // namespace

namespace detail {

const Pair* PairTable::covering(const BinaryWord& w) const {
  auto it = std::upper_bound(pairs_.begin(), pairs_.end(), w, [](const BinaryWord& x, const Pair& p) { return x < p.src; });
  if (it == pairs_.begin()) return nullptr;
  --it;
  return it->src.is_prefix_of(w) ? &*it : nullptr;
}

bool PairTable::has_finer(const BinaryWord& w) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), w, [](const Pair& p, const BinaryWord& x) { return p.src < x; });
  return it != pairs_.end() && it->src != w && w.is_prefix_of(it->src);
}

int PairTable::resolution() const {
  int r = 0;
  for (const Pair& p : pairs_) r = std::max(r, p.src.length());
  return r;
}

void PairTable::pieces_rec(const BinaryWord& u, std::size_t lo, std::size_t hi, bool fill_identity, PairList& out) const {
  if (lo == hi) {
    if (fill_identity) out.push_back({u, u});
    return;
  }
  if (pairs_[lo].src == u) {
    out.push_back(pairs_[lo]);
    return;
  }
  BinaryWord right = u.append(true);
  auto first = pairs_.begin() + static_cast<std::ptrdiff_t>(lo);
  auto last = pairs_.begin() + static_cast<std::ptrdiff_t>(hi);
  auto mid = static_cast<std::size_t>(
      std::lower_bound(first, last, right, [](const Pair& p, const BinaryWord& x) { return p.src < x; }) - pairs_.begin());
  pieces_rec(u.append(false), lo, mid, fill_identity, out);
  pieces_rec(right, mid, hi, fill_identity, out);
}

void PairTable::pieces(const BinaryWord& w, bool fill_identity, PairList& out) const {
  if (const Pair* p = covering(w)) {
    out.push_back({w, w.replace_prefix(p->src, p->dst)});
    return;
  }
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), w, [](const Pair& p, const BinaryWord& x) { return p.src < x; });
  auto hi = std::partition_point(lo, pairs_.end(), [&](const Pair& p) { return w.is_prefix_of(p.src); });
  pieces_rec(w, static_cast<std::size_t>(lo - pairs_.begin()), static_cast<std::size_t>(hi - pairs_.begin()),
             fill_identity, out);
}

}  // namespace detail

// ---- PrefixExchange ----

PrefixExchange PrefixExchange::from_pairs(PairList pairs) {
  PairList canon = canonical_pairs(std::move(pairs), true);
  std::vector<BinaryWord> srcs, dsts;
  for (const Pair& p : canon) {
    srcs.push_back(p.src);
    dsts.push_back(p.dst);
  }
  if (DyadicSet::canonicalize(std::move(srcs)) != DyadicSet::canonicalize(std::move(dsts))) {
    throw Error(ErrorCode::NotBijective, "sources and targets cover different sets: " + pairs_str(canon));
  }
  return PrefixExchange(detail::PairTable(std::move(canon)));
}

PrefixExchange PrefixExchange::from_strings(const StringPairs& pairs) { return from_pairs(parse_pairs(pairs)); }

PrefixExchange PrefixExchange::from_level_images(int level, const std::vector<std::uint32_t>& image) {
  if (level > 30 || image.size() != (std::size_t{1} << level)) {
    throw Error(ErrorCode::InvalidArgument, "image table size does not match level");
  }
  PairList pairs;
  pairs.reserve(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != i) pairs.push_back({BinaryWord::from_index(i, level), BinaryWord::from_index(image[i], level)});
  }
  return from_pairs(std::move(pairs));
}

BinaryWord PrefixExchange::apply(const BinaryWord& w) const {
  if (const Pair* p = table_.covering(w)) return w.replace_prefix(p->src, p->dst);
  if (table_.has_finer(w)) {
    throw Error(ErrorCode::InsufficientResolution,
                "word " + w.str() + " is shorter than the map resolution " + std::to_string(resolution()));
  }
  return w;
}

PairList PrefixExchange::pieces(const BinaryWord& w) const {
  PairList out;
  table_.pieces(w, true, out);
  return out;
}

PrefixExchange PrefixExchange::inverse() const {
  PairList swapped;
  swapped.reserve(pairs().size());
  for (const Pair& p : pairs()) swapped.push_back({p.dst, p.src});
  std::sort(swapped.begin(), swapped.end(), src_less);
  return PrefixExchange(detail::PairTable(std::move(swapped)));
}

DyadicSet PrefixExchange::support() const {
  std::vector<BinaryWord> srcs;
  srcs.reserve(pairs().size());
  for (const Pair& p : pairs()) srcs.push_back(p.src);
  return DyadicSet::canonicalize(std::move(srcs));
}

DyadicSet PrefixExchange::image(const DyadicSet& a) const {
  std::vector<BinaryWord> out;
  PairList buf;
  for (const BinaryWord& w : a.words()) {
    buf.clear();
    table_.pieces(w, true, buf);
    for (const Pair& p : buf) out.push_back(p.dst);
  }
  return DyadicSet::canonicalize(std::move(out));
}

PartialDyadicIso PrefixExchange::restrict_to(const DyadicSet& a) const {
  PairList out;
  for (const BinaryWord& w : a.words()) table_.pieces(w, true, out);
  return PartialDyadicIso::from_pairs(std::move(out));
}

std::string PrefixExchange::str() const { return pairs_str(pairs()); }

// ---- PartialDyadicIso ----

PartialDyadicIso PartialDyadicIso::from_pairs(PairList pairs) {
  return PartialDyadicIso(detail::PairTable(canonical_pairs(std::move(pairs), false)));
}

PartialDyadicIso PartialDyadicIso::from_strings(const StringPairs& pairs) { return from_pairs(parse_pairs(pairs)); }

PartialDyadicIso PartialDyadicIso::identity_on(const DyadicSet& a) {
  PairList pairs;
  for (const BinaryWord& w : a.words()) pairs.push_back({w, w});
  return PartialDyadicIso(detail::PairTable(std::move(pairs)));
}

DyadicSet PartialDyadicIso::domain() const {
  std::vector<BinaryWord> v;
  for (const Pair& p : pairs()) v.push_back(p.src);
  return DyadicSet::canonicalize(std::move(v));
}

DyadicSet PartialDyadicIso::range() const {
  std::vector<BinaryWord> v;
  for (const Pair& p : pairs()) v.push_back(p.dst);
  return DyadicSet::canonicalize(std::move(v));
}

std::optional<BinaryWord> PartialDyadicIso::apply(const BinaryWord& w) const {
  if (const Pair* p = table_.covering(w)) return w.replace_prefix(p->src, p->dst);
  if (table_.has_finer(w)) {
    throw Error(ErrorCode::InsufficientResolution, "word " + w.str() + " straddles the domain boundary");
  }
  return std::nullopt;
}

PartialDyadicIso PartialDyadicIso::inverse() const {
  PairList swapped;
  for (const Pair& p : pairs()) swapped.push_back({p.dst, p.src});
  std::sort(swapped.begin(), swapped.end(), src_less);
  return PartialDyadicIso(detail::PairTable(std::move(swapped)));
}

PairList PartialDyadicIso::pieces(const BinaryWord& w) const {
  PairList out;
  table_.pieces(w, false, out);
  return out;
}

PartialDyadicIso PartialDyadicIso::restrict_to(const DyadicSet& a) const {
  PairList out;
  for (const BinaryWord& w : a.words()) table_.pieces(w, false, out);
  return from_pairs(std::move(out));
}

DyadicSet PartialDyadicIso::image(const DyadicSet& a) const {
  std::vector<BinaryWord> out;
  PairList buf;
  for (const BinaryWord& w : a.words()) {
    buf.clear();
    table_.pieces(w, false, buf);
    for (const Pair& p : buf) out.push_back(p.dst);
  }
  return DyadicSet::canonicalize(std::move(out));
}

std::string PartialDyadicIso::str() const { return pairs_str(pairs()); }

// ---- composition ----

PrefixExchange compose(const PrefixExchange& t, const PrefixExchange& s) {
  if (s.is_identity()) return t;
  if (t.is_identity()) return s;
  PairList out;
  for (const Pair& sp : s.pieces(BinaryWord{})) {
    for (const Pair& tp : t.pieces(sp.dst)) {
      out.push_back({sp.src.concat(tp.src.drop(sp.dst.length())), tp.dst});
    }
  }
  return PrefixExchange::from_pairs(std::move(out));
}

PartialDyadicIso compose(const PartialDyadicIso& t, const PartialDyadicIso& s) {
  PairList out;
  for (const Pair& sp : s.pairs()) {
    for (const Pair& tp : t.pieces(sp.dst)) {
      out.push_back({sp.src.concat(tp.src.drop(sp.dst.length())), tp.dst});
    }
  }
  return PartialDyadicIso::from_pairs(std::move(out));
}

PrefixExchange glue(const std::vector<PartialDyadicIso>& parts) {
  PairList all;
  for (const auto& p : parts) all.insert(all.end(), p.pairs().begin(), p.pairs().end());
  return PrefixExchange::from_pairs(std::move(all));
}

PartialDyadicIso merge(const std::vector<PartialDyadicIso>& parts) {
  PairList all;
  for (const auto& p : parts) all.insert(all.end(), p.pairs().begin(), p.pairs().end());
  return PartialDyadicIso::from_pairs(std::move(all));
}

}  // namespace cantor
