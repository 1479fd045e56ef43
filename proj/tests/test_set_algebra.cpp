#include <doctest.h>

#include <random>

#include "mawdist/errors.hpp"
#include "mawdist/set_algebra.hpp"
#include "test_util.hpp"

using namespace mawdist;

namespace {

const char* kX = "cbaabdcb";
const char* kY = "abcba";

std::vector<std::string> listing(const WordSet& set) {
  return {set.begin(), set.end()};
}

}  // namespace

TEST_CASE("symmetric difference of the example pair") {
  Alphabet abcd("abcd");
  MawSet mx = compute_maws(kX, abcd);
  MawSet my = compute_maws(kY, abcd);
  WordSet sym = symmetric_difference(mx.words, my.words);
  CHECK(listing(sym) ==
        std::vector<std::string>{"d", "aa", "ad", "bc", "cd", "da", "db", "dd",
                                 "aaa", "cbc", "cbd", "dcba"});
  CHECK(listing(symmetric_difference(mx.words, mx.words)).empty());
  CHECK(symmetric_difference(mx.words, WordSet::empty_set(abcd)) == mx.words);

  Alphabet abc("abc");
  CHECK_THROWS_AS(
      symmetric_difference(mx.words, WordSet::empty_set(abc)), InputError);
}

TEST_CASE("directed reduced sets") {
  Alphabet abcd("abcd");
  FactorIndex ix(kX, abcd);
  FactorIndex iy(kY, abcd);
  MawSet mx = compute_maws(ix);
  MawSet my = compute_maws(iy);

  CHECK(listing(directed_d(ix, my)) == std::vector<std::string>{"d", "aa"});
  CHECK(listing(directed_d(iy, mx)) == std::vector<std::string>{"bc"});
  CHECK(directed_d(ix, mx).card() == 0);  // own absent words never occur
}

TEST_CASE("directed set is empty exactly when one word contains the other") {
  std::mt19937 rng(101);
  Alphabet ab("ab");
  for (int round = 0; round < 200; ++round) {
    std::string x = mawtest::random_word(rng, ab, 12);
    std::string y = mawtest::random_word(rng, ab, 12);
    FactorIndex ix(x, ab);
    WordSet d = directed_d(ix, compute_maws(y, ab));
    CHECK((d.card() == 0) == is_factor(x, y));
  }
}

TEST_CASE("pair comparison of the example pair") {
  Alphabet abcd("abcd");
  PairComparison pair = build_d_set(kX, kY, abcd, "x", "y");
  CHECK(pair.x_id == "x");
  CHECK(pair.y_id == "y");
  CHECK(listing(pair.d_set) == std::vector<std::string>{"d", "aa", "bc"});
  CHECK(pair.d_set.claimed_antifactorial());
  CHECK(pair.sym_diff.card() == 12);

  PairComparison same = build_d_set(kX, kX, abcd);
  CHECK(same.d_set.card() == 0);
  CHECK(same.sym_diff.card() == 0);
}

TEST_CASE("antifactorial checks and base reduction") {
  Alphabet abcd("abcd");
  CHECK(is_antifactorial(
      WordSet(Alphabet("ab"), {"aaa", "aabaa", "baba", "bb"})));
  CHECK_FALSE(is_antifactorial(WordSet(abcd, {"d", "cd"})));
  CHECK(is_antifactorial(WordSet::empty_set(abcd)));

  CHECK(listing(antifactorial_base(WordSet(abcd, {"a", "ab", "ba"}))) ==
        std::vector<std::string>{"a"});
  CHECK(antifactorial_base(WordSet::empty_set(abcd)).card() == 0);
  // a present empty word absorbs everything else
  CHECK(listing(antifactorial_base(WordSet(abcd, {"", "a", "bc"}))) ==
        std::vector<std::string>{""});
}

TEST_CASE("reduced set is the base of the symmetric-difference ideal") {
  Alphabet abcd("abcd");
  MawSet mx = compute_maws(kX, abcd);
  MawSet my = compute_maws(kY, abcd);
  WordSet sym = symmetric_difference(mx.words, my.words);
  PairComparison pair = build_d_set(kX, kY, abcd);
  CHECK(antifactorial_base(sym) == pair.d_set);
}

TEST_CASE("pair invariants hold on random pairs") {
  std::mt19937 rng(311);
  for (std::size_t sigma = 2; sigma <= 3; ++sigma) {
    Alphabet alphabet(std::string("abc").substr(0, sigma));
    for (int round = 0; round < 80; ++round) {
      std::string x = mawtest::random_word(rng, alphabet, 30);
      std::string y = mawtest::random_word(rng, alphabet, 30);
      CAPTURE(x);
      CAPTURE(y);
      PairComparison pair = build_d_set(x, y, alphabet);

      CHECK(pair.d_set == set_union(pair.d_x_from_y, pair.d_y_from_x));
      for (const std::string& w : pair.d_set) {
        CHECK(pair.sym_diff.contains(w));
      }
      CHECK(is_antifactorial(pair.d_set));
      CHECK(antifactorial_base(pair.sym_diff) == pair.d_set);
      CHECK((pair.d_set.card() == 0) == (x == y));

      PairComparison swapped = build_d_set(y, x, alphabet);
      CHECK(swapped.d_set == pair.d_set);
      CHECK(swapped.sym_diff == pair.sym_diff);
    }
  }
}
