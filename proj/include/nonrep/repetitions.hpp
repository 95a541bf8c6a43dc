#pragma once

// Squares, repetitions and directedness of finite words.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nonrep/rational.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

/// The factor w[start, start+length) has period `period`.
struct Repetition {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t period = 1;

  Rational exponent() const {
    return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  bool operator==(const Repetition&) const = default;
};

/// `start=.. len=.. period=.. exp=a/b`
std::string to_string(const Repetition& r);

/// Pass, or the first counterexample found.
template <class Witness>
struct Verdict {
  std::optional<Witness> counterexample;

  bool passed() const { return !counterexample.has_value(); }
  explicit operator bool() const { return passed(); }
};

struct ReversalPair {
  Word factor;
  Word reversed;
  std::size_t position = 0;  // start of `factor` in the checked word
  bool operator==(const ReversalPair&) const = default;
};

/// Every square w[s, s+2p) with min_period <= p <= max_period, sorted by (start, period).
std::vector<Repetition> find_squares(const Word& w, std::size_t min_period,
                                     std::size_t max_period);

/// Largest length / smallest-period over all factors whose smallest period is
/// at least min_period; 0 when there is no such factor.
Rational max_exponent(const Word& w, std::size_t min_period);

/// Counterexample ties resolve to the smallest start, then the smallest period;
/// the reported repetition is the maximal one with that start and period.
Verdict<Repetition> is_power_free(const Word& w, const PowerFreeSpec& spec);

/// A length-d factor whose reversal is also a factor (palindromes included).
Verdict<ReversalPair> is_d_directed(const Word& w, std::size_t d);

// Incremental checks. Each looks only at repetitions that end at the last
// symbol of `w`, which is what depth-first word extension needs.

/// Number of t in [0, limit) with w[n-1-t] == w[n-1-t-p], counted from the end
/// until the first mismatch.
inline std::size_t suffix_run(std::span<const Symbol> w, std::size_t p,
                              std::size_t limit) {
  const std::size_t n = w.size();
  if (p >= n) return 0;
  const std::size_t avail = n - p;
  if (limit > avail) limit = avail;
  std::size_t t = 0;
  while (t < limit && w[n - 1 - t] == w[n - 1 - t - p]) ++t;
  return t;
}

/// Shortest forbidden repetition ending at the last symbol, smallest period first.
std::optional<Repetition> suffix_violation(std::span<const Symbol> w,
                                           const PowerFreeSpec& spec);

/// A square of period in [min_period, max_period] ending at the last symbol.
std::optional<Repetition> suffix_square(std::span<const Symbol> w,
                                        std::size_t min_period,
                                        std::size_t max_period);

}  // namespace nonrep
