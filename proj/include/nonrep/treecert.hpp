#pragma once

// Certificates that a level coloring of rooted trees, read off the image of
// a (7/4+)-free ternary word under a uniform morphism, has no square of
// period >= k on any tree path.
//
// A tree path climbs from one vertex to its highest point s and descends
// again, so it spells f1 s f2^R where f1 and f2 both end right before s in
// the branch word. Every such path is a factor of f s f^R for the longer of
// the two, which is what the branch scan examines.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nonrep/graph.hpp"
#include "nonrep/repetitions.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

struct BranchCheckSpec {
  std::size_t k = 1;          // forbid squares of period >= k
  PowerFreeSpec free_spec;    // (beta+, n)-freeness of the branch word
  std::size_t directed_d = 1;

  bool operator==(const BranchCheckSpec&) const = default;
};

/// Parameters the built-in morphisms are certified against.
BranchCheckSpec g2_spec();  // k = 2, (19/10+, 2)-free, 3-directed
BranchCheckSpec g5_spec();  // k = 5, (83/42+, 5)-free, 20-directed

/// Smallest p with (2 - beta) p + 1 >= d. Throws DomainError unless 1 <= beta < 2 and d >= 1.
std::size_t directedness_threshold(const Rational& beta, std::size_t d);

/// A square in f s f^R whose middle is at or left of s and which ends
/// `extension` symbols right of s (0: the square is a factor of f s itself).
struct BranchSquare {
  std::size_t period = 0;
  std::size_t extension = 0;
};

/// Squares of period in [min_period, max_period] in f s f^R with s = w[j],
/// f = w[0, j), restricted to those reaching s from the left. Together with
/// the same test at every earlier position this covers every square of
/// f s f^R, since the word is a palindrome around s.
std::optional<BranchSquare> branch_square_at(std::span<const Symbol> w, std::size_t j,
                                             std::size_t min_period,
                                             std::size_t max_period);

struct BranchViolation {
  std::size_t position = 0;  // index of s in the scanned word
  Word window;               // f' s f'^R, f' the last min(j, 2 max_period) symbols of f
  Repetition square;         // coordinates inside `window`
};

BranchViolation make_branch_violation(std::span<const Symbol> w, std::size_t alphabet,
                                      std::size_t j, std::size_t max_period,
                                      const BranchSquare& sq);

/// Checks that no f s f^R (w = prefix f s suffix, |s| = 1) contains a square of
/// period in [k, max_period]. Reports the first failing position.
Verdict<BranchViolation> branch_palindrome_scan(const Word& w, std::size_t k,
                                                std::size_t max_period);

/// Facts about a morphism that bound long repetitions in its images.
///
/// If h is injective and no h(a) occurs inside h(bc) at a nonzero offset (bc
/// ranging over the length-2 factors of the source language), then a run of
/// at least 2q-1 equal pairs at period p in h(u) forces p = Pq and lifts to a
/// run at period P in u. With u (7/4+)-free the lifted run has at most
/// floor(3P/4) pairs, so the image run has at most floor(3P/4) q + lcs + lcp
/// pairs, lcs/lcp being the longest common suffix/prefix of two distinct images.
struct SyncProfile {
  std::size_t width = 0;
  bool injective = false;
  bool synchronizing = false;
  std::size_t common_prefix = 0;
  std::size_t common_suffix = 0;
  std::string detail;

  /// Runs this long or longer are subject to the bound.
  std::size_t min_lifted_run() const { return 2 * width - 1; }
  /// Largest run of equal pairs at period p once the run is liftable; nullopt
  /// when no liftable run exists (p not a multiple of the width).
  std::optional<std::size_t> max_lifted_run(std::size_t period) const;
  /// Whether every run of at least `pairs` equal pairs at this period is ruled out.
  bool excludes(std::size_t period, std::size_t pairs) const;
};

SyncProfile analyze_synchronization(const Morphism& m);

/// How the period ranges of the freeness check and the branch scan split
/// between exhaustive enumeration and the synchronization bound.
struct CoveragePlan {
  std::size_t threshold = 0;                  // p*
  std::size_t freeness_enumerated_max = 0;    // enumerate periods [n, this]
  bool freeness_closed = false;               // larger periods excluded
  std::size_t scan_enumerated_max = 0;        // enumerate periods [k, this]
  std::size_t min_factor_len = 1;
};

CoveragePlan plan_coverage(const Morphism& m, const BranchCheckSpec& spec,
                           const SyncProfile& sync);

struct CheckRecord {
  std::string name;
  std::map<std::string, std::string> parameters;
  bool passed = false;
  std::optional<std::map<std::string, std::string>> counterexample;
  bool operator==(const CheckRecord&) const = default;
};

struct Certificate {
  Morphism morphism;
  BranchCheckSpec spec;
  std::size_t factor_len = 0;
  std::size_t threshold = 0;          // p*
  std::size_t small_period_max = 0;   // p* - 1
  std::vector<CheckRecord> checks;
  bool overall = false;

  const CheckRecord* check(std::string_view name) const;
  bool operator==(const Certificate&) const = default;
};

/// Runs the four checks (power_free, directed, threshold, palindrome_scan)
/// over the images of every (7/4+)-free ternary word of length `factor_len`.
/// Without `factor_len`, the smallest admissible value is used. Throws
/// ConfigError (with the minimum) when `factor_len` is too small.
Certificate certify_morphic_tree_coloring(const Morphism& m, const BranchCheckSpec& spec,
                                          std::optional<std::size_t> factor_len = std::nullopt);

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Complete rooted tree of the given depth and arity; a vertex on level i is
/// colored w[depth - i], so reading upwards spells w left to right.
std::pair<Graph, Coloring> build_level_tree(const Word& w, std::size_t depth,
                                            std::size_t arity);

}  // namespace nonrep
