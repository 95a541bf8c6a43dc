#include <chrono>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "nonrep/errors.hpp"
#include "nonrep/graphs.hpp"
#include "nonrep/oracles.hpp"
#include "nonrep/paths.hpp"
#include "nonrep/search.hpp"

using namespace nonrep;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SearchBudget small_budget(std::uint64_t nodes) {
  SearchBudget b;
  b.node_limit = nodes;
  return b;
}

// Longest word over `alphabet` avoiding squares of period >= k, by breadth-first growth.
std::size_t brute_longest(std::size_t alphabet, std::size_t k, std::size_t cap) {
  std::vector<Word> layer = {Word(alphabet)};
  std::size_t len = 0;
  while (!layer.empty() && len < cap) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Symbol a = 0; a < alphabet; ++a) {
        Word x = w;
        x.push_back(a);
        if (x.size() < 2 * k || oracle::find_squares(x, k, x.size() / 2).empty()) next.push_back(x);
      }
    }
    if (next.empty()) break;
    layer = std::move(next);
    ++len;
  }
  return len;
}

}  // namespace

TEST(PiK, Examples) {
  const SearchBudget b;
  EXPECT_EQ(pi_k_exact(path_graph(4), 1, b).upper, 3u);
  EXPECT_EQ(pi_k_exact(path_graph(3), 1, b).upper, 2u);
  const auto k4 = pi_k_exact(complete(4), 1, b);
  EXPECT_TRUE(k4.exact());
  EXPECT_EQ(k4.upper, 4u);
  EXPECT_EQ(pi_k_exact(path_graph(1), 1, b).upper, 1u);
  EXPECT_EQ(pi_k_exact(Graph(0), 1, b).upper, 0u);
  EXPECT_THROW(pi_k_exact(path_graph(3), 0, b), DomainError);
  EXPECT_THROW(pi_k_exact(path_graph(3), 1, small_budget(0)), ConfigError);
}

TEST(PiK, WitnessesAreValid) {
  const SearchBudget b;
  for (const auto& g : {path_graph(9), stacked_triangulation(1), outerplanar_u(3), complete(5)}) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto r = pi_k_exact(g, k, b);
      ASSERT_TRUE(r.exact());
      EXPECT_EQ(r.witness.size(), g.vertex_count());
      EXPECT_TRUE(verify_coloring(g, r.witness, k, std::max<std::size_t>(g.vertex_count(), 2 * k)).ok());
    }
  }
}

TEST(PiK, MatchesBruteForceOnSmallGraphs) {
  const SearchBudget b;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::graphs_up_to_iso(n)) {
      for (std::size_t k = 1; k <= 2; ++k) {
        const auto r = pi_k_exact(g, k, b);
        ASSERT_TRUE(r.exact());
        EXPECT_EQ(r.upper, oracle::pi_k_brute(g, k)) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PiK, NonIncreasingInK) {
  const SearchBudget b;
  for (const auto& g : {path_graph(12), stacked_triangulation(1), outerplanar_u(3)}) {
    std::size_t prev = g.vertex_count();
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto r = pi_k_exact(g, k, b);
      ASSERT_TRUE(r.exact());
      EXPECT_LE(r.upper, prev);
      prev = r.upper;
    }
  }
}

TEST(PiK, BudgetExhaustionGivesBounds) {
  const auto r = pi_k_exact(stacked_triangulation(2), 1, small_budget(50));
  EXPECT_TRUE(r.exhausted);
  EXPECT_FALSE(r.exact());
  EXPECT_LT(r.lower, r.upper);
  EXPECT_LE(r.nodes, 50u);

  SearchBudget capped;
  capped.max_colors = 2;
  const auto c = pi_k_exact(path_graph(6), 1, capped);
  EXPECT_FALSE(c.exhausted);
  EXPECT_EQ(c.lower, 3u);
  EXPECT_EQ(c.upper, 6u);
}

TEST(FindColoring, RefutesAndFinds) {
  const SearchBudget b;
  EXPECT_EQ(find_coloring(path_graph(4), 1, 2, b).outcome, SearchOutcome::refuted);
  const auto found = find_coloring(path_graph(20), 1, 3, b);
  ASSERT_EQ(found.outcome, SearchOutcome::found);
  EXPECT_EQ(found.coloring[0], 0u);
  EXPECT_TRUE(verify_coloring(path_graph(20), found.coloring, 1, 20).ok());
}

TEST(RootedTrees, CountsMatchKnownSequence) {
  const std::vector<std::size_t> counts = {1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    std::size_t seen = 0;
    std::set<std::vector<std::size_t>> distinct;
    for_each_rooted_tree(n, [&](const std::vector<std::size_t>& levels) {
      ++seen;
      distinct.insert(levels);
      EXPECT_EQ(levels.size(), n);
      EXPECT_EQ(levels[0], 0u);
      return true;
    });
    EXPECT_EQ(seen, counts[n - 1]) << n;
    EXPECT_EQ(distinct.size(), seen);
  }
}

TEST(RootedTrees, PathFirstStarLast) {
  std::vector<std::vector<std::size_t>> all;
  for_each_rooted_tree(5, [&](const std::vector<std::size_t>& levels) {
    all.push_back(levels);
    return true;
  });
  EXPECT_EQ(all.front(), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(all.back(), (std::vector<std::size_t>{0, 1, 1, 1, 1}));
  EXPECT_EQ(parents_from_levels({0, 1, 2, 1, 2}), (std::vector<std::size_t>{0, 0, 1, 0, 3}));
  const auto t = tree_from_levels({0, 1, 2, 1, 2});
  EXPECT_EQ(t.vertex_count(), 5u);
  EXPECT_EQ(t.edge_count(), 4u);
  EXPECT_EQ(t.family, "rooted_tree");
}

TEST(ExtendWord, Examples) {
  const SearchBudget b;
  const auto binary = extend_word_search(2, 1, 4, b);
  EXPECT_FALSE(binary.reached_target);
  EXPECT_EQ(binary.word.str(), "010");

  const auto ternary = extend_word_search(3, 1, 300, b);
  ASSERT_TRUE(ternary.reached_target);
  EXPECT_EQ(ternary.word.size(), 300u);
  EXPECT_TRUE(oracle::find_squares(ternary.word, 1, 150).empty());

  const auto b3 = extend_word_search(2, 3, 300, b);
  ASSERT_TRUE(b3.reached_target);
  EXPECT_TRUE(oracle::find_squares(b3.word, 3, 150).empty());
}

TEST(ExtendWord, LongestBinaryAvoidingPeriodTwoMatchesBruteForce) {
  const SearchBudget b;
  const std::size_t longest = brute_longest(2, 2, 60);
  ASSERT_LT(longest, 60u);
  const auto r = extend_word_search(2, 2, 60, b);
  EXPECT_FALSE(r.reached_target);
  EXPECT_TRUE(r.exhausted == false);
  EXPECT_EQ(r.word.size(), longest);
  EXPECT_TRUE(oracle::find_squares(r.word, 2, r.word.size() / 2).empty());
}

TEST(ExtendWord, IsLexicographicallyLeast) {
  const SearchBudget b;
  // least square-free ternary word of length 12, by brute force
  std::string least;
  std::vector<Symbol> d(12, 0);
  while (least.empty()) {
    Word w(d, 3);
    if (oracle::find_squares(w, 1, 6).empty()) least = w.str();
    std::size_t i = d.size();
    while (i > 0 && ++d[i - 1] == 3) d[--i] = 0;
    if (i == 0) break;
  }
  EXPECT_EQ(extend_word_search(3, 1, 12, b).word.str(), least);
}

TEST(TreeWitness, SmallestShapes) {
  const SearchBudget b;
  const auto p4 = tree_witness_search(1, 2, 6, 3, b);
  ASSERT_EQ(p4.outcome, SearchOutcome::found);
  EXPECT_EQ(p4.tree->vertex_count(), 4u);
  EXPECT_EQ(p4.parents, (std::vector<std::size_t>{0, 0, 1, 2}));

  const auto p10 = tree_witness_search(5, 1, 9, 2, b);
  ASSERT_EQ(p10.outcome, SearchOutcome::found);
  EXPECT_EQ(p10.tree->vertex_count(), 10u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_LE(p10.tree->degree(v), 2u);
}

TEST(TreeWitness, BoundedSearchIsInconclusive) {
  const auto r = tree_witness_search(1, 3, 4, 3, small_budget(2000), 10);
  EXPECT_EQ(r.outcome, SearchOutcome::exhausted);
  EXPECT_FALSE(r.tree.has_value());
}

TEST(PiK, TimeLimitBoundsASingleExpensiveCheck) {
  SearchBudget b;
  b.time_limit_seconds = 0.5;
  const auto start = std::chrono::steady_clock::now();
  const auto r = pi_k_exact(stacked_triangulation(3), 1, b);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.exhausted);
  EXPECT_LT(seconds, 5.0);
}
