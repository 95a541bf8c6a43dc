#pragma once

// Exact pi_k on small graphs and desk-scale searches behind the path and tree results.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/words.hpp"

namespace nonrep {

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  double time_limit_seconds = 600.0;
  std::size_t max_colors = 10;

  void validate() const;
};

struct PiResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  Coloring witness;  // non-repetitive for period >= k, uses `upper` colors
  bool exhausted = false;
  std::uint64_t nodes = 0;

  bool exact() const { return lower == upper; }
};

enum class SearchOutcome { found, refuted, exhausted };

struct ColoringSearch {
  SearchOutcome outcome = SearchOutcome::refuted;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

/// Backtracking over colorings in vertex order, with color symmetry broken
/// (vertex 0 gets color 0, color c+1 only after c). After each assignment only
/// the paths through the new vertex are re-checked.
ColoringSearch find_coloring(const Graph& g, std::size_t k, std::size_t colors,
                             const SearchBudget& budget);

/// Minimum number of colors avoiding squares of period >= k on every path.
PiResult pi_k_exact(const Graph& g, std::size_t k, const SearchBudget& budget);

struct WordSearchResult {
  Word word;  // of target length, or the lexicographically least longest word found
  bool reached_target = false;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Depth-first extension avoiding squares of period >= k; returns the
/// lexicographically least word of target_len, or the longest achievable.
WordSearchResult extend_word_search(std::size_t alphabet, std::size_t k,
                                    std::size_t target_len, const SearchBudget& budget);

/// Rooted trees on n vertices as level sequences (root at level 0), starting
/// with the path and ending with the star. Each rooted tree appears once.
void for_each_rooted_tree(std::size_t n,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// parent[v] for v >= 1 (parent[0] = 0), from a preorder level sequence.
std::vector<std::size_t> parents_from_levels(const std::vector<std::size_t>& levels);
Graph tree_from_levels(const std::vector<std::size_t>& levels);

struct TreeWitnessResult {
  SearchOutcome outcome = SearchOutcome::exhausted;  // found: witness; exhausted: inconclusive
  std::optional<Graph> tree;
  std::vector<std::size_t> parents;
  std::uint64_t shapes = 0;
  std::uint64_t nodes = 0;
  std::uint64_t refutation_nodes = 0;  // nodes spent refuting the witness
};

/// Smallest rooted tree within the shape bounds (by vertex count, then shape
/// order) with no `colors`-coloring avoiding squares of period >= k.
TreeWitnessResult tree_witness_search(std::size_t k, std::size_t colors, std::size_t max_depth,
                                      std::size_t max_arity, const SearchBudget& budget,
                                      std::size_t max_vertices = 24);

}  // namespace nonrep
