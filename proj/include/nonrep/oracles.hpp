#pragma once

// Deliberately naive reference implementations. They share no code with the
// library routines they cross-check beyond the data types.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/repetitions.hpp"
#include "nonrep/words.hpp"

namespace nonrep::oracle {

/// Triple loop over start, period and offset.
std::vector<Repetition> find_squares(const Word& w, std::size_t min_period,
                                     std::size_t max_period);

/// Builds f s f^R in full for every position and searches it for squares.
/// Returns the first failing position.
std::optional<std::size_t> branch_scan(const Word& w, std::size_t k, std::size_t max_period);

/// All simple paths with at least two vertices, smaller endpoint first, sorted.
std::vector<std::vector<Vertex>> all_paths(const Graph& g);

/// Lexicographically least path (from `paths`, as produced by all_paths)
/// whose color sequence contains a square of period >= k.
std::optional<std::vector<Vertex>> least_violating_path(
    const std::vector<std::vector<Vertex>>& paths, const std::vector<std::uint32_t>& colors,
    std::size_t k);

/// Every graph on n vertices up to isomorphism, grown one vertex at a time.
std::vector<Graph> graphs_up_to_iso(std::size_t n);

/// Minimum colors avoiding squares of period >= k, by trying every coloring.
std::size_t pi_k_brute(const Graph& g, std::size_t k);

}  // namespace nonrep::oracle
