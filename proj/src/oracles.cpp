#include "nonrep/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nonrep::oracle {

std::vector<Repetition> find_squares(const Word& w, std::size_t min_period,
                                     std::size_t max_period) {
  std::vector<Repetition> out;
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t p = min_period; p <= max_period && start + 2 * p <= n; ++p) {
      bool square = true;
      for (std::size_t i = 0; i < p; ++i) {
        if (w[start + i] != w[start + p + i]) square = false;
      }
      if (square) out.push_back(Repetition{start, 2 * p, p});
    }
  }
  return out;
}

std::optional<std::size_t> branch_scan(const Word& w, std::size_t k, std::size_t max_period) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    Word fsf(w.alphabet_size());
    for (std::size_t i = 0; i <= j; ++i) fsf.push_back(w[i]);
    for (std::size_t i = j; i-- > 0;) fsf.push_back(w[i]);
    if (!oracle::find_squares(fsf, k, max_period).empty()) return j;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> all_paths(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  auto extend = [&](auto&& self) -> void {
    if (path.size() >= 2 && path.front() < path.back()) out.push_back(path);
    for (Vertex v : g.neighbors(path.back())) {
      if (std::find(path.begin(), path.end(), v) != path.end()) continue;
      path.push_back(v);
      self(self);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool contains_square(const std::vector<std::uint32_t>& seq, std::size_t k) {
  for (std::size_t start = 0; start < seq.size(); ++start) {
    for (std::size_t p = k; start + 2 * p <= seq.size(); ++p) {
      if (std::equal(seq.begin() + static_cast<std::ptrdiff_t>(start),
                     seq.begin() + static_cast<std::ptrdiff_t>(start + p),
                     seq.begin() + static_cast<std::ptrdiff_t>(start + p))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> least_violating_path(
    const std::vector<std::vector<Vertex>>& paths, const std::vector<std::uint32_t>& colors,
    std::size_t k) {
  for (const auto& p : paths) {
    std::vector<std::uint32_t> seq;
    for (Vertex v : p) seq.push_back(colors[v]);
    if (contains_square(seq, k)) return p;
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint32_t;

std::size_t pair_bit(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

bool has(Mask m, std::size_t i, std::size_t j) { return (m >> pair_bit(i, j)) & 1U; }

// Smallest relabelled mask over permutations that list vertices by non-increasing degree.
Mask canonical(Mask m, std::size_t n) {
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && has(m, i, j)) ++deg[i];
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mask best = ~Mask{0};
  do {
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < n && sorted; ++i) sorted = deg[perm[i]] >= deg[perm[i + 1]];
    if (!sorted) continue;
    Mask r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (has(m, perm[i], perm[j])) r |= Mask{1} << pair_bit(i, j);
      }
    }
    best = std::min(best, r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(std::size_t n) {
  std::set<Mask> level{0};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<Mask> next;
    for (Mask m : level) {
      for (Mask nb = 0; nb < (Mask{1} << (size - 1)); ++nb) {
        Mask grown = m;
        for (std::size_t i = 0; i + 1 < size; ++i) {
          if ((nb >> i) & 1U) grown |= Mask{1} << pair_bit(i, size - 1);
        }
        next.insert(canonical(grown, size));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  for (Mask m : level) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (has(m, i, j)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::size_t pi_k_brute(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  const auto paths = all_paths(g);
  for (std::size_t c = 1;; ++c) {
    std::vector<std::uint32_t> colors(n, 0);
    while (true) {
      if (!least_violating_path(paths, colors, k)) return c;
      std::size_t i = 0;
      while (i < n && ++colors[i] == c) colors[i++] = 0;
      if (i == n) break;
    }
  }
}

}  // namespace nonrep::oracle
