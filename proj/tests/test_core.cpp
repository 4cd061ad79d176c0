#include "doctest.h"

#include <algorithm>
#include <set>

#include "cantor/dyadic_set.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"
#include "oracle.hpp"

using namespace cantor;

TEST_CASE("dyadic rationals are exact and canonical") {
  CHECK(DyadicRational(2, 2) == DyadicRational(1, 1));
  CHECK(DyadicRational::pow2(3) + DyadicRational::pow2(3) == DyadicRational::pow2(2));
  CHECK((DyadicRational::one() - DyadicRational::pow2(1)).str() == "1/2^1");
  CHECK(DyadicRational::pow2(1).halved(2) == DyadicRational::pow2(3));
  CHECK(DyadicRational::pow2(2) < DyadicRational::pow2(1));
  CHECK(DyadicRational::floor_at(Rational(1, 3), 4) == DyadicRational(5, 4));
  CHECK(DyadicRational::ceil_at(Rational(1, 3), 4) == DyadicRational(6, 4));
  CHECK(DyadicRational::largest_pow2_below(Rational(1, 12)) == DyadicRational::pow2(4));
  CHECK(DyadicRational::largest_pow2_below(Rational(1, 4)) == DyadicRational::pow2(3));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
}

TEST_CASE("dyadic arithmetic agrees with integer arithmetic at a common level") {
  SeededRng rng(7);
  for (int i = 0; i < 500; ++i) {
    auto a = static_cast<std::int64_t>(rng.below(1 << 20));
    auto b = static_cast<std::int64_t>(rng.below(1 << 20));
    int ea = static_cast<int>(rng.below(20)), eb = static_cast<int>(rng.below(20));
    DyadicRational x(a, ea), y(b, eb);
    std::int64_t sx = a << (20 - ea), sy = b << (20 - eb);
    CHECK((x + y).scaled_to(20) == sx + sy);
    CHECK((x < y) == (sx < sy));
    CHECK(Rational(x) + Rational(y) == Rational(x + y));
  }
}

TEST_CASE("binary words order lexicographically with prefixes first") {
  std::vector<std::string> text{"", "0", "1", "00", "01", "10", "011", "0110", "1", "111"};
  std::vector<BinaryWord> words;
  for (const auto& t : text) words.push_back(BinaryWord::parse(t));
  std::sort(words.begin(), words.end());
  std::sort(text.begin(), text.end());
  for (std::size_t i = 0; i < text.size(); ++i) CHECK(words[i].str() == text[i]);
  CHECK(BinaryWord::from_index(5, 4).str() == "0101");
  CHECK(BinaryWord::parse("0110").index() == 6);
  CHECK(BinaryWord::parse("01").is_prefix_of(BinaryWord::parse("0110")));
  CHECK(BinaryWord::parse("0110").replace_prefix(BinaryWord::parse("01"), BinaryWord::parse("10")).str() == "1010");
  CHECK(BinaryWord::parse("e").empty());
}

TEST_CASE("canonical forms") {
  CHECK(DyadicSet::of({"00", "01"}) == DyadicSet::of({"0"}));
  CHECK(DyadicSet::of({"0", "01"}) == DyadicSet::of({"0"}));
  CHECK(DyadicSet::of({"000", "001", "010", "011", "100", "101", "110", "111"}).is_full());
}

TEST_CASE("set operations") {
  CHECK(DyadicSet::of({"01"}).intersect(DyadicSet::of({"0"})) == DyadicSet::of({"01"}));
  CHECK(DyadicSet::of({"0"}).complement() == DyadicSet::of({"1"}));
  CHECK(DyadicSet::full().minus(DyadicSet::of({"10"})) == DyadicSet::of({"0", "11"}));
  CHECK(DyadicSet::of({"01", "10"}).measure() == DyadicRational::pow2(1));
  CHECK(DyadicSet{}.measure() == DyadicRational::zero());
  CHECK(DyadicSet::of({"0", "10", "110"}).measure() == DyadicRational(7, 3));
  auto words = [](const std::vector<BinaryWord>& v) {
    std::vector<std::string> s;
    for (const auto& w : v) s.push_back(w.str());
    return s;
  };
  CHECK(words(DyadicSet::of({"0"}).refine_to_level(2)) == std::vector<std::string>{"00", "01"});
  CHECK(words(DyadicSet::full().refine_to_level(1)) == std::vector<std::string>{"0", "1"});
  CHECK(words(DyadicSet::of({"01", "10"}).refine_to_level(3)) ==
        std::vector<std::string>{"010", "011", "100", "101"});
}

namespace {

std::vector<std::string> random_words(SeededRng& rng, int count, int max_len) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::string w;
    for (int j = 0; j < len; ++j) w += rng.below(2) ? '1' : '0';
    out.push_back(w);
  }
  return out;
}

std::vector<std::string> strings_of(const DyadicSet& s) {
  std::vector<std::string> out;
  for (const auto& w : s.words()) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("set operations agree with level-8 bitmaps") {
  SeededRng rng(11);
  const int L = 8;
  for (int trial = 0; trial < 300; ++trial) {
    auto wa = random_words(rng, 1 + static_cast<int>(rng.below(6)), L);
    auto wb = random_words(rng, 1 + static_cast<int>(rng.below(6)), L);
    DyadicSet a = DyadicSet::of(wa), b = DyadicSet::of(wb);
    auto ba = oracle::bitmap(wa, L), bb = oracle::bitmap(wb, L);
    std::vector<char> u(ba.size()), in(ba.size()), df(ba.size()), co(ba.size());
    for (std::size_t i = 0; i < ba.size(); ++i) {
      u[i] = ba[i] || bb[i];
      in[i] = ba[i] && bb[i];
      df[i] = ba[i] && !bb[i];
      co[i] = !ba[i];
    }
    CHECK(oracle::bitmap(strings_of(a.unite(b)), L) == u);
    CHECK(oracle::bitmap(strings_of(a.intersect(b)), L) == in);
    CHECK(oracle::bitmap(strings_of(a.minus(b)), L) == df);
    CHECK(oracle::bitmap(strings_of(a.complement()), L) == co);
    auto count = [](const std::vector<char>& v) { return static_cast<std::int64_t>(std::count(v.begin(), v.end(), 1)); };
    CHECK(a.measure() == DyadicRational(count(ba), L));
    CHECK(a.unite(b).measure() + a.intersect(b).measure() == a.measure() + b.measure());
    CHECK(a.complement().complement() == a);
    CHECK(a.disjoint(b) == (count(in) == 0));
    CHECK(a.subset_of(b) == (count(df) == 0));

    auto shuffled = wa;
    rng.shuffle(shuffled);
    CHECK(DyadicSet::of(shuffled) == a);
    std::vector<BinaryWord> refined = a.refine_to_level(L);
    CHECK(DyadicSet::canonicalize(refined) == a);
  }
}

TEST_CASE("split_front takes the lexicographically first part") {
  auto [x, rest] = split_front(DyadicSet::of({"01", "11"}), DyadicRational(3, 3));
  CHECK(x == DyadicSet::of({"01", "110"}));
  CHECK(rest == DyadicSet::of({"111"}));
  CHECK(oracle::thrown([] { split_front(DyadicSet::of({"0"}), DyadicRational::one()); }) ==
        ErrorCode::InvalidArgument);
}
