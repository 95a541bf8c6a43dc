#include "nonrep/paths.hpp"

#include <algorithm>

#include "nonrep/errors.hpp"

namespace nonrep {

PathWalk for_each_path(const Graph& g, std::size_t max_vertices,
                       const std::function<bool(std::span<const Vertex>)>& visit,
                       std::uint64_t max_paths) {
  PathWalk walk;
  const std::size_t n = g.vertex_count();
  if (max_vertices < 2) return walk;
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<std::size_t> next;  // next neighbour index to try, per path position
  path.reserve(std::min(n, max_vertices));
  next.reserve(std::min(n, max_vertices));

  for (Vertex s = 0; s < n && !walk.stopped && !walk.truncated; ++s) {
    path.assign(1, s);
    next.assign(1, 0);
    on_path[s] = 1;
    while (!path.empty()) {
      const Vertex top = path.back();
      const auto& nbrs = g.neighbors(top);
      std::size_t& idx = next.back();
      if (path.size() >= max_vertices) {
        if (!walk.cut) {
          walk.cut = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex v) { return !on_path[v]; });
        }
        idx = nbrs.size();
      }
      while (idx < nbrs.size() && on_path[nbrs[idx]]) ++idx;
      if (idx == nbrs.size()) {
        on_path[top] = 0;
        path.pop_back();
        next.pop_back();
        continue;
      }
      const Vertex v = nbrs[idx++];
      path.push_back(v);
      next.push_back(0);
      on_path[v] = 1;
      if (v > s) {
        if (max_paths && walk.paths >= max_paths) {
          walk.truncated = true;
          break;
        }
        ++walk.paths;
        if (!visit(path)) {
          walk.stopped = true;
          break;
        }
      }
    }
    for (Vertex v : path) on_path[v] = 0;
  }
  return walk;
}

std::vector<std::vector<Vertex>> enumerate_paths(const Graph& g, std::size_t max_vertices) {
  std::vector<std::vector<Vertex>> out;
  for_each_path(g, max_vertices, [&](std::span<const Vertex> p) {
    out.emplace_back(p.begin(), p.end());
    return true;
  });
  return out;
}

namespace {

// Square of period >= k ending at the last symbol, smallest period first.
std::optional<Repetition> square_ending_at_back(const std::vector<std::uint32_t>& seq,
                                                std::size_t k) {
  const std::size_t len = seq.size();
  for (std::size_t p = k; 2 * p <= len; ++p) {
    std::size_t i = 0;
    while (i < p && seq[len - 1 - i] == seq[len - 1 - i - p]) ++i;
    if (i == p) return Repetition{len - 2 * p, 2 * p, p};
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify_coloring(const Graph& g, const Coloring& c, std::size_t k,
                             std::size_t max_path, std::uint64_t max_paths) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (max_path < 2 * k) throw DomainError("max_path must be at least 2k");
  if (c.size() != g.vertex_count()) throw DomainError("coloring does not cover the graph");
  VerifyResult out;
  const std::size_t n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<std::uint32_t> seq;
  // first square on the current path, if any; containment is inherited by extensions
  std::vector<std::optional<Repetition>> first;
  bool cut = false;

  // Preorder from each start is lexicographic order, so the first oriented
  // path that both contains a square and ends above its start is the answer.
  auto dfs = [&](auto&& self, Vertex s) -> bool {
    const Vertex top = path.back();
    const auto& nbrs = g.neighbors(top);
    if (path.size() >= max_path) {
      if (!cut) cut = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex v) { return !on_path[v]; });
      return false;
    }
    for (Vertex v : nbrs) {
      if (on_path[v]) continue;
      path.push_back(v);
      seq.push_back(c[v]);
      on_path[v] = 1;
      first.push_back(first.back() ? first.back() : square_ending_at_back(seq, k));
      bool done = false;
      if (v > s) {
        if (max_paths && out.paths >= max_paths) {
          out.truncated = true;
          done = true;
        } else {
          ++out.paths;
          if (first.back()) {
            out.violation = ColoringViolation{path, *first.back()};
            done = true;
          }
        }
      }
      if (!done) done = self(self, s);
      first.pop_back();
      on_path[v] = 0;
      seq.pop_back();
      path.pop_back();
      if (done) return true;
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    seq.assign(1, c[s]);
    first.assign(1, std::nullopt);
    on_path[s] = 1;
    const bool done = dfs(dfs, s);
    on_path[s] = 0;
    if (done) break;
  }
  out.exhaustive = !out.truncated && !cut && !out.violation;
  return out;
}

}  // namespace nonrep
