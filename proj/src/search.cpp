#include "nonrep/search.hpp"

#include <algorithm>
#include <chrono>

#include "nonrep/errors.hpp"
#include "nonrep/repetitions.hpp"

namespace nonrep {

void SearchBudget::validate() const {
  if (node_limit == 0) throw ConfigError("node limit must be positive");
  if (!(time_limit_seconds > 0)) throw ConfigError("time limit must be positive");
  if (max_colors == 0) throw ConfigError("max colors must be positive");
}

namespace {

class Clock {
 public:
  explicit Clock(double seconds)
      : deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds))) {}
  bool expired() const { return std::chrono::steady_clock::now() >= deadline_; }
  double remaining_seconds() const {
    return std::chrono::duration<double>(deadline_ - std::chrono::steady_clock::now()).count();
  }

 private:
  std::chrono::steady_clock::time_point deadline_;
};

// Backtracking state for one color count.
class ColoringSearcher {
 public:
  ColoringSearcher(const Graph& g, std::size_t k, std::size_t colors, const SearchBudget& budget)
      : g_(g), k_(k), colors_(colors), budget_(budget), clock_(budget.time_limit_seconds),
        color_(g.vertex_count(), 0), on_arm_(g.vertex_count(), 0) {}

  ColoringSearch run() {
    ColoringSearch out;
    if (g_.vertex_count() == 0) {
      out.outcome = SearchOutcome::found;
      out.coloring = Coloring({}, colors_);
      return out;
    }
    const bool found = assign(0, 0);
    out.nodes = nodes_;
    if (found) {
      out.outcome = SearchOutcome::found;
      out.coloring = Coloring(color_, colors_);
    } else {
      out.outcome = exhausted_ ? SearchOutcome::exhausted : SearchOutcome::refuted;
    }
    return out;
  }

 private:
  bool assign(Vertex v, std::size_t used) {
    if (v == g_.vertex_count()) return true;
    const std::size_t top = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      if (nodes_ >= budget_.node_limit || ((++nodes_ & 0xfff) == 0 && clock_.expired())) {
        exhausted_ = true;
        return false;
      }
      color_[v] = static_cast<std::uint32_t>(c);
      const bool square = square_through(v);
      if (exhausted_) return false;
      if (!square && assign(v + 1, std::max(used, c + 1))) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  // Some path inside the colored prefix [0, v] through v spells a square of period >= k.
  bool square_through(Vertex v) {
    arm_a_.assign(1, v);
    on_arm_[v] = 1;
    const bool hit = grow_a(v);
    on_arm_[v] = 0;
    return hit;
  }

  bool grow_a(Vertex v) {
    // first arm fixed: reversed arm_a_ then the second arm from v
    arm_b_.assign(1, v);
    seq_.clear();
    for (auto it = arm_a_.rbegin(); it != arm_a_.rend(); ++it) seq_.push_back(color_[*it]);
    if (grow_b(v)) return true;
    const Vertex tip = arm_a_.back();
    for (Vertex u : g_.neighbors(tip)) {
      if (u > v || on_arm_[u]) continue;
      arm_a_.push_back(u);
      on_arm_[u] = 1;
      const bool hit = grow_a(v);
      on_arm_[u] = 0;
      arm_a_.pop_back();
      if (hit) return true;
    }
    return false;
  }

  // A single check can walk exponentially many arms, so it watches the clock too;
  // on expiry it unwinds as if a square were found and leaves exhausted_ set.
  bool out_of_time() {
    if ((++steps_ & 0xffff) == 0 && clock_.expired()) exhausted_ = true;
    return exhausted_;
  }

  bool grow_b(Vertex v) {
    if (out_of_time()) return true;
    const std::size_t len = seq_.size();
    if (len >= 2 && len % 2 == 0 && len / 2 >= k_) {
      const std::size_t half = len / 2;
      std::size_t i = 0;
      while (i < half && seq_[i] == seq_[i + half]) ++i;
      if (i == half) return true;
    }
    const Vertex tip = arm_b_.back();
    for (Vertex u : g_.neighbors(tip)) {
      if (u > v || on_arm_[u]) continue;
      arm_b_.push_back(u);
      on_arm_[u] = 1;
      seq_.push_back(color_[u]);
      const bool hit = grow_b(v);
      seq_.pop_back();
      on_arm_[u] = 0;
      arm_b_.pop_back();
      if (hit) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::size_t colors_;
  const SearchBudget& budget_;
  Clock clock_;
  std::vector<std::uint32_t> color_;
  std::vector<char> on_arm_;
  std::vector<Vertex> arm_a_;
  std::vector<Vertex> arm_b_;
  std::vector<std::uint32_t> seq_;
  std::uint64_t nodes_ = 0;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

Coloring rainbow(std::size_t n) {
  std::vector<std::uint32_t> colors(n);
  for (std::size_t v = 0; v < n; ++v) colors[v] = static_cast<std::uint32_t>(v);
  return Coloring(std::move(colors), n);
}

}  // namespace

ColoringSearch find_coloring(const Graph& g, std::size_t k, std::size_t colors,
                             const SearchBudget& budget) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (colors < 1) throw DomainError("need at least one color");
  budget.validate();
  return ColoringSearcher(g, k, colors, budget).run();
}

PiResult pi_k_exact(const Graph& g, std::size_t k, const SearchBudget& budget) {
  budget.validate();
  if (k < 1) throw DomainError("k must be at least 1");
  PiResult out;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    out.witness = Coloring({}, 0);
    return out;
  }
  // every color distinct repeats nothing, so n colors always suffice
  out.upper = n;
  out.witness = rainbow(n);
  const std::size_t top = std::min(budget.max_colors, n);
  Clock clock(budget.time_limit_seconds);
  for (std::size_t c = 1; c <= top; ++c) {
    SearchBudget remaining = budget;
    remaining.node_limit = budget.node_limit > out.nodes ? budget.node_limit - out.nodes : 0;
    remaining.time_limit_seconds = clock.remaining_seconds();
    if (remaining.node_limit == 0 || clock.expired()) {
      out.lower = c;
      out.exhausted = true;
      return out;
    }
    const auto res = find_coloring(g, k, c, remaining);
    out.nodes += res.nodes;
    if (res.outcome == SearchOutcome::found) {
      out.lower = out.upper = c;
      out.witness = res.coloring;
      return out;
    }
    if (res.outcome == SearchOutcome::exhausted) {
      out.lower = c;
      out.exhausted = true;
      return out;
    }
  }
  out.lower = top + 1;
  if (out.lower == n) out.upper = n;
  return out;
}

WordSearchResult extend_word_search(std::size_t alphabet, std::size_t k,
                                    std::size_t target_len, const SearchBudget& budget) {
  if (alphabet < 1) throw DomainError("alphabet must have at least one symbol");
  if (k < 1) throw DomainError("k must be at least 1");
  budget.validate();
  WordSearchResult out;
  out.word = Word(alphabet);
  Word w(alphabet);
  Clock clock(budget.time_limit_seconds);
  auto dfs = [&](auto&& self) -> bool {
    if (w.size() > out.word.size()) out.word = w;
    if (w.size() == target_len) return true;
    for (std::size_t a = 0; a < alphabet; ++a) {
      if (out.nodes >= budget.node_limit || ((++out.nodes & 0xfff) == 0 && clock.expired())) {
        out.exhausted = true;
        return false;
      }
      w.push_back(static_cast<Symbol>(a));
      if (!suffix_square(w.symbols(), k, w.size() / 2) && self(self)) return true;
      w.pop_back();
      if (out.exhausted) return false;
    }
    return false;
  };
  out.reached_target = dfs(dfs);
  return out;
}

void for_each_rooted_tree(std::size_t n,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = i;
  while (true) {
    if (!visit(level)) return;
    // last position deeper than level 1; none left means the star was just visited
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) return;
    std::size_t q = p;
    while (level[--q] != level[p] - 1) {
    }
    const std::size_t shift = p - q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - shift];
  }
}

std::vector<std::size_t> parents_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<std::size_t> parent(levels.size(), 0);
  std::vector<std::size_t> last_at;  // last vertex seen on each level
  for (std::size_t v = 0; v < levels.size(); ++v) {
    const std::size_t l = levels[v];
    if (v == 0 ? l != 0 : (l == 0 || l > last_at.size())) {
      throw DomainError("not a preorder level sequence");
    }
    if (v > 0) parent[v] = last_at[l - 1];
    last_at.resize(l + 1);
    last_at[l] = v;
  }
  return parent;
}

Graph tree_from_levels(const std::vector<std::size_t>& levels) {
  const auto parent = parents_from_levels(levels);
  Graph g(levels.size());
  g.family = "rooted_tree";
  g.levels = levels;
  for (std::size_t v = 1; v < levels.size(); ++v) {
    g.add_edge(static_cast<Vertex>(parent[v]), static_cast<Vertex>(v));
  }
  return g;
}

TreeWitnessResult tree_witness_search(std::size_t k, std::size_t colors, std::size_t max_depth,
                                      std::size_t max_arity, const SearchBudget& budget,
                                      std::size_t max_vertices) {
  if (k < 1 || colors < 1 || max_arity < 1) {
    throw DomainError("tree_witness_search needs k, colors, max_arity >= 1");
  }
  budget.validate();
  TreeWitnessResult out;
  Clock clock(budget.time_limit_seconds);

  // largest tree the shape bounds allow
  std::size_t cap = 0;
  std::size_t width = 1;
  for (std::size_t d = 0; d <= max_depth && cap < max_vertices; ++d) {
    cap += width;
    width = std::min<std::size_t>(width * max_arity, max_vertices);
  }
  cap = std::min(cap, max_vertices);

  bool stop = false;
  for (std::size_t n = 1; n <= cap && !stop; ++n) {
    for_each_rooted_tree(n, [&](const std::vector<std::size_t>& levels) {
      const auto depth = *std::max_element(levels.begin(), levels.end());
      if (depth > max_depth) return true;
      const auto parent = parents_from_levels(levels);
      std::vector<std::size_t> children(n, 0);
      for (std::size_t v = 1; v < n; ++v) ++children[parent[v]];
      if (*std::max_element(children.begin(), children.end()) > max_arity) return true;

      ++out.shapes;
      SearchBudget remaining = budget;
      remaining.node_limit = budget.node_limit > out.nodes ? budget.node_limit - out.nodes : 0;
      remaining.time_limit_seconds = clock.remaining_seconds();
      if (remaining.node_limit == 0 || clock.expired()) {
        stop = true;
        return false;
      }
      const auto g = tree_from_levels(levels);
      const auto res = find_coloring(g, k, colors, remaining);
      out.nodes += res.nodes;
      if (res.outcome == SearchOutcome::exhausted) {
        stop = true;
        return false;
      }
      if (res.outcome == SearchOutcome::refuted) {
        out.outcome = SearchOutcome::found;
        out.tree = g;
        out.parents = parent;
        out.refutation_nodes = res.nodes;
        stop = true;
        return false;
      }
      return true;
    });
  }
  return out;
}

}  // namespace nonrep
