#pragma once

// Simple-path enumeration and the brute-force non-repetitive coloring check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/repetitions.hpp"

namespace nonrep {

struct PathWalk {
  std::uint64_t paths = 0;
  bool stopped = false;    // the visitor asked to stop
  bool truncated = false;  // the path budget ran out
  bool cut = false;        // some path could have been extended past max_vertices
};

/// Visits every simple path with 2..max_vertices vertices exactly once,
/// oriented so the smaller endpoint comes first, in lexicographic order.
/// `max_paths` = 0 means no budget.
PathWalk for_each_path(const Graph& g, std::size_t max_vertices,
                       const std::function<bool(std::span<const Vertex>)>& visit,
                       std::uint64_t max_paths = 0);

std::vector<std::vector<Vertex>> enumerate_paths(const Graph& g, std::size_t max_vertices);

struct ColoringViolation {
  std::vector<Vertex> path;
  Repetition square;  // over the path's color sequence
};

struct VerifyResult {
  std::optional<ColoringViolation> violation;
  std::uint64_t paths = 0;
  bool truncated = false;
  bool exhaustive = false;  // every simple path of the graph was examined

  bool ok() const { return !violation; }
};

/// No path may contain a square of period >= k in its color sequence. The
/// violation reported is the lexicographically least such path (smaller
/// endpoint first) with the first square found along it.
VerifyResult verify_coloring(const Graph& g, const Coloring& c, std::size_t k,
                             std::size_t max_path, std::uint64_t max_paths = 0);

}  // namespace nonrep
