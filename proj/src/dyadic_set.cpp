#include "cantor/dyadic_set.hpp"

#include <algorithm>

#include "cantor/error.hpp"

namespace cantor {

void merge_siblings(std::vector<BinaryWord>& words) {
  std::vector<BinaryWord> stack;
  stack.reserve(words.size());
  for (const BinaryWord& w : words) {
    stack.push_back(w);
    while (stack.size() >= 2) {
      const BinaryWord& b = stack[stack.size() - 1];
      const BinaryWord& a = stack[stack.size() - 2];
      if (b.empty() || a.length() != b.length() || a.sibling() != b) break;
      BinaryWord parent = a.parent();
      stack.pop_back();
      stack.back() = parent;
    }
  }
  words = std::move(stack);
}

DyadicSet DyadicSet::canonicalize(std::vector<BinaryWord> words) {
  std::sort(words.begin(), words.end());
  std::vector<BinaryWord> kept;
  kept.reserve(words.size());
  for (const BinaryWord& w : words) {
    if (!kept.empty() && kept.back().is_prefix_of(w)) continue;
    kept.push_back(w);
  }
  merge_siblings(kept);
  return DyadicSet(std::move(kept));
}

DyadicSet DyadicSet::of(const std::vector<std::string>& words) {
  std::vector<BinaryWord> parsed;
  parsed.reserve(words.size());
  for (const auto& s : words) parsed.push_back(BinaryWord::parse(s));
  return canonicalize(std::move(parsed));
}

int DyadicSet::resolution() const {
  int r = 0;
  for (const auto& w : words_) r = std::max(r, w.length());
  return r;
}

DyadicRational DyadicSet::measure() const {
  int r = resolution();
  std::uint64_t total = 0;
  for (const auto& w : words_) total += std::uint64_t{1} << (r - w.length());
  return DyadicRational(static_cast<std::int64_t>(total), r);
}

DyadicSet DyadicSet::unite(const DyadicSet& o) const {
  std::vector<BinaryWord> all;
  all.reserve(words_.size() + o.words_.size());
  std::merge(words_.begin(), words_.end(), o.words_.begin(), o.words_.end(), std::back_inserter(all));
  std::vector<BinaryWord> kept;
  kept.reserve(all.size());
  for (const BinaryWord& w : all) {
    if (!kept.empty() && kept.back().is_prefix_of(w)) continue;
    kept.push_back(w);
  }
  merge_siblings(kept);
  return DyadicSet(std::move(kept));
}

DyadicSet DyadicSet::intersect(const DyadicSet& o) const {
  std::vector<BinaryWord> out;
  std::size_t i = 0, j = 0;
  while (i < words_.size() && j < o.words_.size()) {
    const BinaryWord& a = words_[i];
    const BinaryWord& b = o.words_[j];
    if (a.is_prefix_of(b)) {
      out.push_back(b);
      ++j;
    } else if (b.is_prefix_of(a)) {
      out.push_back(a);
      ++i;
    } else if (a < b) {
      ++i;
    } else {
      ++j;
    }
  }
  merge_siblings(out);
  return DyadicSet(std::move(out));
}

namespace {

// Complement of words[lo, hi) inside N_w; all those words extend w.
void complement_rec(const std::vector<BinaryWord>& words, std::size_t lo, std::size_t hi, const BinaryWord& w,
                    std::vector<BinaryWord>& out) {
  if (lo == hi) {
    out.push_back(w);
    return;
  }
  if (words[lo] == w) return;
  BinaryWord left = w.append(false);
  BinaryWord right = w.append(true);
  auto mid = static_cast<std::size_t>(
      std::lower_bound(words.begin() + static_cast<std::ptrdiff_t>(lo), words.begin() + static_cast<std::ptrdiff_t>(hi),
                       right) -
      words.begin());
  complement_rec(words, lo, mid, left, out);
  complement_rec(words, mid, hi, right, out);
}

}  // namespace

DyadicSet DyadicSet::complement() const {
  std::vector<BinaryWord> out;
  complement_rec(words_, 0, words_.size(), BinaryWord{}, out);
  return DyadicSet(std::move(out));
}

DyadicSet DyadicSet::minus(const DyadicSet& o) const { return intersect(o.complement()); }

DyadicSet DyadicSet::within(const BinaryWord& w) const { return intersect(cylinder(w)); }

bool DyadicSet::disjoint(const DyadicSet& o) const {
  std::size_t i = 0, j = 0;
  while (i < words_.size() && j < o.words_.size()) {
    const BinaryWord& a = words_[i];
    const BinaryWord& b = o.words_[j];
    if (a.comparable(b)) return false;
    if (a < b) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

bool DyadicSet::subset_of(const DyadicSet& o) const { return intersect(o) == *this; }

Coverage DyadicSet::coverage(const BinaryWord& w) const {
  auto it = std::upper_bound(words_.begin(), words_.end(), w);
  if (it != words_.begin() && std::prev(it)->is_prefix_of(w)) return Coverage::Inside;
  if (it != words_.end() && w.is_prefix_of(*it)) return Coverage::Mixed;
  return Coverage::Outside;
}

std::vector<BinaryWord> DyadicSet::refine_to_level(int level) const {
  std::vector<BinaryWord> out;
  for (const auto& w : words_) {
    if (w.length() > level) {
      throw Error(ErrorCode::InvalidArgument, "word " + w.str() + " longer than level " + std::to_string(level));
    }
    int extra = level - w.length();
    if (extra > 30) throw Error(ErrorCode::TooLarge, "refinement would exceed 2^30 words per cylinder");
    std::uint64_t base = w.index() << extra;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << extra); ++t) out.push_back(BinaryWord::from_index(base | t, level));
  }
  return out;
}

std::pair<DyadicSet, DyadicSet> split_front(const DyadicSet& a, const DyadicRational& amount) {
  if (amount > a.measure() || amount < DyadicRational::zero()) {
    throw Error(ErrorCode::InvalidArgument, "cannot take " + amount.str() + " from a set of measure " + a.measure().str());
  }
  std::vector<BinaryWord> taken, rest;
  DyadicRational need = amount;
  std::vector<BinaryWord> work(a.words().rbegin(), a.words().rend());
  while (!work.empty()) {
    BinaryWord w = work.back();
    work.pop_back();
    DyadicRational mw = DyadicRational::pow2(w.length());
    if (need.is_zero()) {
      rest.push_back(w);
    } else if (mw <= need) {
      taken.push_back(w);
      need -= mw;
    } else {
      work.push_back(w.append(true));
      work.push_back(w.append(false));
    }
  }
  return {DyadicSet::canonicalize(std::move(taken)), DyadicSet::canonicalize(std::move(rest))};
}

std::string DyadicSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += ",";
    out += words_[i].empty() ? "e" : words_[i].str();
  }
  return out + "}";
}

}  // namespace cantor
