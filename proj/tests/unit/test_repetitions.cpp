#include <random>

#include <gtest/gtest.h>

#include "nonrep/errors.hpp"
#include "nonrep/oracles.hpp"
#include "nonrep/repetitions.hpp"
#include "nonrep/words.hpp"

using namespace nonrep;

namespace {

Word W(const char* s, std::size_t alphabet = 3) { return Word::parse(s, alphabet); }

Word random_word(std::mt19937& rng, std::size_t len, std::size_t alphabet) {
  std::vector<Symbol> s(len);
  for (auto& c : s) c = static_cast<Symbol>(rng() % alphabet);
  return Word(s, alphabet);
}

// Largest len/p over factors and their smallest periods, by brute force.
Rational brute_max_exponent(const Word& w, std::size_t min_period) {
  Rational best(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      for (std::size_t p = 1; p <= j - i; ++p) {
        bool periodic = true;
        for (std::size_t t = i; t + p < j; ++t) periodic = periodic && w[t] == w[t + p];
        if (periodic) {
          if (p >= min_period) {
            best = std::max(best, Rational(static_cast<std::int64_t>(j - i), static_cast<std::int64_t>(p)));
          }
          break;
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(FindSquares, Examples) {
  const auto a = find_squares(W("0101"), 1, 4);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], (Repetition{0, 4, 2}));
  EXPECT_TRUE(find_squares(W("011220012201"), 2, 10).empty());
  const auto c = find_squares(W("00"), 1, 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Repetition{0, 2, 1}));
  EXPECT_THROW(find_squares(W("00"), 2, 1), DomainError);
}

TEST(FindSquares, SortedByStartThenPeriod) {
  const auto r = find_squares(W("0000", 1), 1, 2);
  const std::vector<Repetition> expect = {{0, 2, 1}, {0, 4, 2}, {1, 2, 1}, {2, 2, 1}};
  EXPECT_EQ(r, expect);
}

TEST(FindSquares, MatchesTripleLoopOnRandomWords) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_word(rng, rng() % 40, 2 + rng() % 2);
    const std::size_t lo = 1 + rng() % 5;
    const std::size_t hi = lo + rng() % 20;
    EXPECT_EQ(find_squares(w, lo, hi), oracle::find_squares(w, lo, hi)) << w.str();
  }
}

TEST(MaxExponent, Examples) {
  EXPECT_EQ(max_exponent(W("0110110"), 1), Rational(7, 3));
  EXPECT_EQ(max_exponent(W("01"), 1), Rational(1));
  EXPECT_EQ(max_exponent(W("000"), 1), Rational(3));
  EXPECT_EQ(max_exponent(W(""), 1), Rational(0));
}

TEST(MaxExponent, MatchesBruteForce) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, rng() % 25, 2 + rng() % 2);
    const std::size_t mp = 1 + rng() % 4;
    EXPECT_EQ(max_exponent(w, mp), brute_max_exponent(w, mp)) << w.str() << " " << mp;
  }
}

TEST(MaxExponent, MonotoneOverPrefixes) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 30, 3);
    for (std::size_t len = 0; len <= w.size(); ++len) {
      EXPECT_LE(max_exponent(w.slice(0, len), 1), max_exponent(w, 1));
    }
  }
}

TEST(PowerFree, Examples) {
  EXPECT_TRUE(is_power_free(g5().image(0), PowerFreeSpec(Rational(83, 42), true, 5)).passed());
  const auto v = is_power_free(W("01010", 2), PowerFreeSpec(Rational(19, 10), true, 2));
  ASSERT_FALSE(v.passed());
  EXPECT_EQ(v.counterexample->period, 2u);
  EXPECT_EQ(v.counterexample->exponent(), Rational(5, 2));
  EXPECT_TRUE(is_power_free(W(""), PowerFreeSpec(Rational(1), false, 1)).passed());
}

TEST(PowerFree, StrictnessBoundary) {
  // "010" has exponent 3/2 exactly
  EXPECT_TRUE(is_power_free(W("010"), PowerFreeSpec(Rational(3, 2), true, 1)).passed());
  EXPECT_FALSE(is_power_free(W("010"), PowerFreeSpec(Rational(3, 2), false, 1)).passed());
}

TEST(PowerFree, SquareFreenessMatchesFindSquares) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_word(rng, 1 + rng() % 30, 2 + rng() % 2);
    const std::size_t k = 1 + rng() % 4;
    const bool free = is_power_free(w, PowerFreeSpec(Rational(2), false, k)).passed();
    const bool none = w.size() < 2 * k || find_squares(w, k, w.size() / 2).empty();
    EXPECT_EQ(free, none) << w.str() << " k=" << k;
  }
}

TEST(PowerFree, CounterexampleIsSmallestStartThenPeriod) {
  const auto v = is_power_free(W("1000101"), PowerFreeSpec(Rational(2), false, 1));
  ASSERT_FALSE(v.passed());
  EXPECT_EQ(v.counterexample->start, 1u);
  EXPECT_EQ(v.counterexample->period, 1u);
}

TEST(Directed, Examples) {
  const auto v = is_d_directed(W("0123210", 4), 3);
  ASSERT_FALSE(v.passed());
  EXPECT_EQ(v.counterexample->factor.str(), "012");
  EXPECT_EQ(v.counterexample->reversed.str(), "210");
  EXPECT_TRUE(is_d_directed(apply_morphism(g2(), W("012")), 3).passed());
  EXPECT_TRUE(is_d_directed(W("01"), 3).passed());
  EXPECT_THROW(is_d_directed(W("01"), 0), DomainError);
}

TEST(Directed, PalindromicFactorFails) {
  EXPECT_FALSE(is_d_directed(W("010"), 3).passed());
}

TEST(Directed, MonotoneInWindow) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 10 + rng() % 40, 2 + rng() % 2);
    bool seen_pass = false;
    for (std::size_t d = 1; d <= w.size() + 1; ++d) {
      const bool pass = is_d_directed(w, d).passed();
      if (seen_pass) EXPECT_TRUE(pass) << w.str() << " d=" << d;
      seen_pass = seen_pass || pass;
    }
  }
}

TEST(SuffixChecks, AgreeWithFullScan) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_word(rng, 1 + rng() % 30, 2);
    const std::size_t k = 1 + rng() % 3;
    const auto s = suffix_square(w.symbols(), k, w.size() / 2);
    bool ends_at_last = false;
    if (w.size() >= 2 * k) {
      for (const auto& r : find_squares(w, k, w.size() / 2)) ends_at_last |= r.start + r.length == w.size();
    }
    EXPECT_EQ(s.has_value(), ends_at_last) << w.str();
  }
}

TEST(Repetition, TextFormat) {
  EXPECT_EQ(to_string(Repetition{3, 5, 2}), "start=3 len=5 period=2 exp=5/2");
}
