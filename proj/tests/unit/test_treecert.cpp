#include <random>

#include <gtest/gtest.h>

#include "nonrep/errors.hpp"
#include "nonrep/oracles.hpp"
#include "nonrep/paths.hpp"
#include "nonrep/treecert.hpp"

using namespace nonrep;

namespace {

Word W(const char* s, std::size_t alphabet = 3) { return Word::parse(s, alphabet); }

BranchCheckSpec spec_of(std::size_t k, Rational beta, std::size_t n, std::size_t d) {
  BranchCheckSpec s;
  s.k = k;
  s.free_spec = PowerFreeSpec(beta, true, n);
  s.directed_d = d;
  return s;
}

const BranchCheckSpec kG2Spec = spec_of(2, Rational(19, 10), 2, 3);
const BranchCheckSpec kG5Spec = spec_of(5, Rational(83, 42), 5, 20);

std::vector<Word> all_words(std::size_t alphabet, std::size_t len) {
  std::vector<Word> out;
  std::vector<Symbol> d(len, 0);
  while (true) {
    out.emplace_back(d, alphabet);
    std::size_t i = len;
    while (i > 0 && ++d[i - 1] == alphabet) d[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST(Threshold, Examples) {
  EXPECT_EQ(directedness_threshold(Rational(19, 10), 3), 20u);
  EXPECT_EQ(directedness_threshold(Rational(83, 42), 20), 798u);
  EXPECT_EQ(directedness_threshold(Rational(1), 2), 1u);
  EXPECT_THROW(directedness_threshold(Rational(2), 3), DomainError);
  EXPECT_THROW(directedness_threshold(Rational(1, 2), 3), DomainError);
}

TEST(Threshold, SmallestPeriodSatisfyingTheInequality) {
  for (const auto& [beta, d] : {std::pair{Rational(19, 10), 3}, std::pair{Rational(83, 42), 20},
                                std::pair{Rational(3, 2), 7}, std::pair{Rational(7, 4), 2}}) {
    std::size_t first = 0;
    for (std::size_t p = 1; p <= 1000 && first == 0; ++p) {
      if ((Rational(2) - beta) * static_cast<std::int64_t>(p) + 1 >= static_cast<std::int64_t>(d)) first = p;
    }
    EXPECT_EQ(directedness_threshold(beta, d), first);
  }
}

TEST(BranchScan, Examples) {
  EXPECT_TRUE(branch_palindrome_scan(W("01"), 1, 1).passed());
  const auto v = branch_palindrome_scan(W("00"), 1, 1);
  ASSERT_FALSE(v.passed());
  EXPECT_EQ(v.counterexample->position, 1u);
  EXPECT_EQ(v.counterexample->window.str(), "000");
}

TEST(BranchScan, RestrictedWindowMatchesFullPalindromes) {
  // exhaustive on short ternary words
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& w : all_words(3, len)) {
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t pmax = k; pmax <= 4; ++pmax) {
          const auto mine = branch_palindrome_scan(w, k, pmax);
          const auto ref = oracle::branch_scan(w, k, pmax);
          ASSERT_EQ(mine.passed(), !ref.has_value()) << w.str() << " k=" << k << " pmax=" << pmax;
          if (ref) ASSERT_EQ(mine.counterexample->position, *ref) << w.str();
        }
      }
    }
  }
}

TEST(BranchScan, RestrictedWindowMatchesOnLongWords) {
  std::mt19937 rng(23);
  const Word base = apply_morphism(g2(), generate_powerfree_ternary(20));
  for (int trial = 0; trial < 40; ++trial) {
    Word w(3);
    if (trial % 2 == 0) {
      const std::size_t off = rng() % 40;
      w = base.slice(off, 200);
    } else {
      std::vector<Symbol> s(100 + rng() % 101);
      for (auto& c : s) c = static_cast<Symbol>(rng() % 3);
      w = Word(s, 3);
    }
    const std::size_t k = 1 + rng() % 4;
    const std::size_t pmax = k + rng() % 12;
    const auto mine = branch_palindrome_scan(w, k, pmax);
    const auto ref = oracle::branch_scan(w, k, pmax);
    ASSERT_EQ(mine.passed(), !ref.has_value()) << trial;
    if (ref) EXPECT_EQ(mine.counterexample->position, *ref);
  }
}

TEST(BranchScan, ViolationWindowHoldsTheSquare) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Symbol> s(5 + rng() % 40);
    for (auto& c : s) c = static_cast<Symbol>(rng() % 3);
    const Word w(s, 3);
    const auto v = branch_palindrome_scan(w, 2, 6);
    if (v.passed()) continue;
    const auto& x = *v.counterexample;
    const auto& r = x.square;
    ASSERT_LE(r.start + r.length, x.window.size());
    for (std::size_t i = 0; i < r.period; ++i) {
      EXPECT_EQ(x.window[r.start + i], x.window[r.start + r.period + i]);
    }
    EXPECT_EQ(x.window, reverse(x.window));
  }
}

TEST(BranchScan, G2ImagesOfLength8Words) {
  for (const auto& u : enumerate_powerfree_ternary(8)) {
    ASSERT_TRUE(branch_palindrome_scan(apply_morphism(g2(), u), 2, 19).passed()) << u.str();
  }
}

TEST(Synchronization, ProfilesOfBothMorphisms) {
  for (const Morphism* m : {&g2(), &g5()}) {
    const auto s = analyze_synchronization(*m);
    EXPECT_TRUE(s.injective);
    EXPECT_TRUE(s.synchronizing) << s.detail;
    std::size_t lcp = 0, lcs = 0;
    const std::size_t q = m->uniform_width();
    for (Symbol a = 0; a < 3; ++a) {
      for (Symbol b = a + 1; b < 3; ++b) {
        std::size_t i = 0;
        while (i < q && m->image(a)[i] == m->image(b)[i]) ++i;
        lcp = std::max(lcp, i);
        i = 0;
        while (i < q && m->image(a)[q - 1 - i] == m->image(b)[q - 1 - i]) ++i;
        lcs = std::max(lcs, i);
      }
    }
    EXPECT_EQ(s.common_prefix, lcp);
    EXPECT_EQ(s.common_suffix, lcs);
  }
  EXPECT_EQ(analyze_synchronization(g5()).common_prefix, 16u);
  EXPECT_EQ(analyze_synchronization(g5()).common_suffix, 3u);
}

TEST(Synchronization, LongRunsInImagesRespectTheLiftedBound) {
  for (const Morphism* m : {&g2(), &g5()}) {
    const auto sync = analyze_synchronization(*m);
    const Word img = apply_morphism(*m, generate_powerfree_ternary(150));
    const auto s = img.symbols();
    for (std::size_t p = 1; p <= 400; ++p) {
      std::size_t run = 0, longest = 0;
      for (std::size_t i = 0; i + p < s.size(); ++i) {
        run = s[i] == s[i + p] ? run + 1 : 0;
        longest = std::max(longest, run);
      }
      if (longest >= sync.min_lifted_run()) {
        const auto bound = sync.max_lifted_run(p);
        ASSERT_TRUE(bound.has_value()) << m->name() << " p=" << p;
        EXPECT_LE(longest, *bound) << m->name() << " p=" << p;
      }
    }
  }
}

TEST(Synchronization, NonInjectiveMorphismIsFlagged) {
  const Morphism flat("flat", {W("0", 1), W("0", 1), W("0", 1)});
  const auto s = analyze_synchronization(flat);
  EXPECT_FALSE(s.injective);
  EXPECT_FALSE(s.excludes(5, 100));
}

TEST(Certify, G2Passes) {
  const auto c = certify_morphic_tree_coloring(g2(), kG2Spec, 8);
  EXPECT_TRUE(c.overall);
  EXPECT_EQ(c.threshold, 20u);
  EXPECT_EQ(c.small_period_max, 19u);
  ASSERT_EQ(c.checks.size(), 4u);
  EXPECT_EQ(c.checks[0].name, "power_free");
  EXPECT_EQ(c.checks[1].name, "directed");
  EXPECT_EQ(c.checks[2].name, "threshold");
  EXPECT_EQ(c.checks[3].name, "palindrome_scan");
  for (const auto& r : c.checks) EXPECT_TRUE(r.passed) << r.name;
  EXPECT_EQ(c.check("palindrome_scan")->parameters.at("enumerated_periods"), "[2, 19]");
}

TEST(Certify, G5Passes) {
  const auto c = certify_morphic_tree_coloring(g5(), kG5Spec);
  EXPECT_TRUE(c.overall);
  EXPECT_EQ(c.threshold, 798u);
  EXPECT_EQ(c.small_period_max, 797u);
  EXPECT_EQ(c.factor_len, 9u);
  EXPECT_EQ(c.check("palindrome_scan")->parameters.at("periods"), "[5, 797]");
  EXPECT_EQ(c.check("palindrome_scan")->parameters.at("relies_on"), "directed, power_free");
}

TEST(Certify, MinimumFactorLength) {
  try {
    certify_morphic_tree_coloring(g5(), kG5Spec, 8);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    ASSERT_TRUE(e.minimum().has_value());
    EXPECT_EQ(*e.minimum(), 9);
  }
  try {
    certify_morphic_tree_coloring(g2(), kG2Spec, 4);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.minimum().value_or(0), 5);
  }
  EXPECT_TRUE(certify_morphic_tree_coloring(g2(), kG2Spec, 5).overall);
}

TEST(Certify, ConstantMorphismFailsFreeness) {
  const Morphism flat("flat", {W("0", 1), W("0", 1), W("0", 1)});
  const auto c = certify_morphic_tree_coloring(flat, spec_of(1, Rational(19, 10), 1, 1), 4);
  EXPECT_FALSE(c.overall);
  EXPECT_FALSE(c.check("power_free")->passed);
  ASSERT_TRUE(c.check("power_free")->counterexample.has_value());
  EXPECT_EQ(c.check("power_free")->counterexample->at("repetition").substr(0, 22), "start=0 len=2 period=1");
}

TEST(Certify, FreenessAtExactly74IsNotClosed) {
  const Morphism id("id", {W("0"), W("1"), W("2")});
  const auto c = certify_morphic_tree_coloring(id, spec_of(2, Rational(7, 4), 1, 3), 12);
  EXPECT_FALSE(c.check("power_free")->passed);
  EXPECT_FALSE(c.check("power_free")->counterexample.has_value());
  EXPECT_NE(c.check("power_free")->parameters.at("status").find("7/4"), std::string::npos);
}

TEST(Certify, ScanCounterexampleIsARealTreePath) {
  // period-1 squares occur in g2 images, so k = 1 must fail the scan
  const auto c = certify_morphic_tree_coloring(g2(), spec_of(1, Rational(19, 10), 2, 3), 8);
  const auto* scan = c.check("palindrome_scan");
  ASSERT_FALSE(scan->passed);
  const Word window = Word::parse(scan->counterexample->at("window"), 3);
  const std::size_t half = window.size() / 2;
  const auto [tree, coloring] = build_level_tree(window.slice(0, half + 1), half, 2);
  EXPECT_FALSE(verify_coloring(tree, coloring, 1, tree.vertex_count()).ok());
}

TEST(Certify, JsonRoundTripAndReproducible) {
  const auto a = certify_morphic_tree_coloring(g2(), kG2Spec, 8);
  const auto b = certify_morphic_tree_coloring(g2(), kG2Spec, 8);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(certificate_from_json(to_json(a)), a);
  const auto c = certify_morphic_tree_coloring(g5(), kG5Spec);
  EXPECT_EQ(certificate_from_json(nlohmann::json::parse(to_json(c).dump())), c);
  EXPECT_EQ(to_json(c)["spec"]["beta"], "83/42");
  EXPECT_THROW(certificate_from_json(nlohmann::json::object()), DomainError);
}

TEST(Certify, LongImagesSatisfyEveryCheckDirectly) {
  const Word u = generate_powerfree_ternary(200);
  const Word i2 = apply_morphism(g2(), u);
  EXPECT_TRUE(is_power_free(i2, kG2Spec.free_spec).passed());
  EXPECT_TRUE(is_d_directed(i2, 3).passed());
  EXPECT_TRUE(branch_palindrome_scan(i2, 2, 19).passed());
  const Word i5 = apply_morphism(g5(), u);
  EXPECT_TRUE(is_power_free(i5, kG5Spec.free_spec).passed());
  EXPECT_TRUE(is_d_directed(i5, 20).passed());
  EXPECT_TRUE(branch_palindrome_scan(i5, 5, 797).passed());
}

TEST(LevelTree, Examples) {
  const auto [path, c] = build_level_tree(W("012"), 2, 1);
  ASSERT_EQ(path.vertex_count(), 3u);
  EXPECT_EQ(path.edge_count(), 2u);
  // vertex 2 is the leaf; leaf to root spells the word
  EXPECT_EQ(c[2], 0u);
  EXPECT_EQ(c[1], 1u);
  EXPECT_EQ(c[0], 2u);
  const auto [root, rc] = build_level_tree(W("2"), 0, 3);
  EXPECT_EQ(root.vertex_count(), 1u);
  EXPECT_EQ(rc[0], 2u);
  EXPECT_THROW(build_level_tree(W("01"), 2, 2), DomainError);
  EXPECT_THROW(build_level_tree(W("012"), 2, 0), DomainError);
}

TEST(LevelTree, G2TreeOfDepth10HasNoSquareOfPeriodAtLeast2) {
  const Word w = apply_morphism(g2(), generate_powerfree_ternary(2));
  ASSERT_EQ(w.size(), 24u);
  const auto [tree, c] = build_level_tree(w, 10, 2);
  EXPECT_EQ(tree.vertex_count(), 2047u);
  const auto res = verify_coloring(tree, c, 2, tree.vertex_count());
  EXPECT_TRUE(res.ok());
  EXPECT_TRUE(res.exhaustive);
}

TEST(LevelTree, CertifiedMorphismsPassThePathOracleAcrossWindows) {
  const Word u = generate_powerfree_ternary(30);
  for (const auto& [m, k] : {std::pair{&g2(), std::size_t{2}}, std::pair{&g5(), std::size_t{5}}}) {
    const Word img = apply_morphism(*m, u);
    for (std::size_t off = 0; off + 9 <= img.size() && off < 60; off += 3) {
      const auto [tree, c] = build_level_tree(img.slice(off, 9), 8, 2);
      ASSERT_TRUE(verify_coloring(tree, c, k, tree.vertex_count()).ok()) << m->name() << " " << off;
    }
  }
}
