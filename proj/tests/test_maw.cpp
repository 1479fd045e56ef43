#include <doctest.h>

#include <random>
#include <vector>

#include "mawdist/errors.hpp"
#include "mawdist/factor_index.hpp"
#include "mawdist/maw.hpp"
#include "mawdist/set_algebra.hpp"
#include "test_util.hpp"

using namespace mawdist;

namespace {

std::vector<std::string> listing(const MawSet& set) {
  return {set.words.begin(), set.words.end()};
}

}  // namespace

TEST_CASE("factor index answers membership like the naive test") {
  Alphabet ab("ab");
  FactorIndex index("abaabab", ab);
  CHECK(index.contains("aab"));
  CHECK_FALSE(index.contains("bb"));
  CHECK(index.contains(""));
  CHECK(index.contains("abaabab"));
  CHECK_FALSE(index.contains("abaababa"));
  CHECK_FALSE(index.contains("abx"));

  FactorIndex empty("", ab);
  CHECK(empty.contains(""));
  CHECK_FALSE(empty.contains("a"));

  CHECK_THROWS_AS(FactorIndex("abc", ab), InputError);
}

TEST_CASE("factor index agrees with is_factor on random words") {
  std::mt19937 rng(23);
  for (std::size_t sigma = 2; sigma <= 4; ++sigma) {
    Alphabet alphabet(std::string("abcd").substr(0, sigma));
    for (int round = 0; round < 40; ++round) {
      std::string v = mawtest::random_word(rng, alphabet, 40);
      FactorIndex index(v, alphabet);
      CHECK(index.state_count() <= 2 * std::max<std::size_t>(v.size(), 1) + 1);
      for (const std::string& f : factors(v, alphabet)) {
        CHECK(index.contains(f));
      }
      for (int probes = 0; probes < 30; ++probes) {
        std::string u = mawtest::random_word(rng, alphabet, v.size() + 2);
        CHECK(index.contains(u) == is_factor(u, v));
      }
    }
  }
}

TEST_CASE("minimal absent words of the two-letter example word") {
  Alphabet ab("ab");
  MawSet m = compute_maws("abaabab", ab, "v");
  CHECK(listing(m) == std::vector<std::string>{"bb", "aaa", "baba", "aabaa"});
  CHECK(m.source_id == "v");
  CHECK(m.words.claimed_antifactorial());
  CHECK(is_antifactorial(m.words));
}

TEST_CASE("minimal absent words of the four-letter example pair") {
  Alphabet abcd("abcd");
  MawSet mx = compute_maws("cbaabdcb", abcd);
  CHECK(listing(mx) ==
        std::vector<std::string>{"ac", "ad", "bb", "bc", "ca", "cc", "cd",
                                 "da", "db", "dd", "aaa", "aba", "bab", "cbd",
                                 "dcba"});
  // d never occurs in the second word, so it shows up as a length-1 element
  MawSet my = compute_maws("abcba", abcd);
  CHECK(listing(my) == std::vector<std::string>{"d", "aa", "ac", "bb", "ca",
                                                "cc", "aba", "bab", "cbc"});
}

TEST_CASE("forced small cases") {
  Alphabet ab("ab");
  CHECK(listing(compute_maws("a", ab)) == std::vector<std::string>{"b", "aa"});
  // the empty word has every single symbol minimally absent
  CHECK(listing(compute_maws("", ab)) == std::vector<std::string>{"a", "b"});
  CHECK(listing(compute_maws_oracle("", ab)) ==
        std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(compute_maws("abc", ab), InputError);
}

TEST_CASE("oracle route matches the indexed route") {
  std::mt19937 rng(43);
  for (std::size_t sigma = 2; sigma <= 4; ++sigma) {
    Alphabet alphabet(std::string("abcd").substr(0, sigma));
    for (int round = 0; round < 60; ++round) {
      std::string v = mawtest::random_word(rng, alphabet, 30);
      CAPTURE(v);
      MawSet fast = compute_maws(v, alphabet);
      MawSet slow = compute_maws_oracle(v, alphabet);
      CHECK(fast.words == slow.words);
    }
  }
}

TEST_CASE("oracle refuses oversized input") {
  Alphabet ab("ab");
  std::string big(65, 'a');
  CHECK_THROWS_AS(compute_maws_oracle(big, ab), InputError);
  CHECK_NOTHROW(compute_maws_oracle(big, ab, 65));
  CHECK(listing(compute_maws_oracle("abaabab", ab)) ==
        listing(compute_maws("abaabab", ab)));
}

TEST_CASE("every computed set is antifactorial and within the size bound") {
  std::mt19937 rng(91);
  for (std::size_t sigma = 2; sigma <= 4; ++sigma) {
    Alphabet alphabet(std::string("abcd").substr(0, sigma));
    for (int round = 0; round < 30; ++round) {
      std::string v = mawtest::random_word(rng, alphabet, 60);
      MawSet m = compute_maws(v, alphabet);
      CHECK(is_antifactorial(m.words));
      CHECK(m.words.card() <= sigma * v.size() + sigma);
      for (const std::string& w : m.words) {
        CHECK(w.size() <= v.size() + 1);
      }
    }
  }
}

TEST_CASE("duality: factors are exactly the words avoiding the absent set") {
  // exhaustive over every word up to |v|+1 for small v
  std::mt19937 rng(57);
  Alphabet ab("ab");
  for (int round = 0; round < 15; ++round) {
    std::string v = mawtest::random_word(rng, ab, 7);
    MawSet m = compute_maws(v, ab);
    std::vector<std::string> frontier{""};
    for (std::size_t len = 0; len <= v.size() + 1; ++len) {
      std::vector<std::string> next;
      for (const std::string& u : frontier) {
        bool blocked = false;
        for (const std::string& w : m.words) {
          if (is_factor(w, u)) {
            blocked = true;
            break;
          }
        }
        CHECK(is_factor(u, v) == !blocked);
        for (char c : ab.symbols()) {
          next.push_back(u + c);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("length filter") {
  Alphabet ab("ab");
  MawSet m = compute_maws("abaabab", ab);
  CHECK(listing(filter_by_length(m, 2)) == std::vector<std::string>{"bb"});
  CHECK(listing(filter_by_length(m, 1)).empty());
  CHECK(filter_by_length(m, 5).words == m.words);
  CHECK(filter_by_length(m, 2).words.claimed_antifactorial());
  CHECK_THROWS_AS(filter_by_length(m, 0), InputError);
}
