#include "nonrep/suite.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "nonrep/graphs.hpp"
#include "nonrep/oracles.hpp"
#include "nonrep/paths.hpp"
#include "nonrep/search.hpp"
#include "nonrep/treecert.hpp"
#include "nonrep/words.hpp"

namespace nonrep {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Collects failures; the outcome passes when none were recorded.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }

  CriterionOutcome outcome() const {
    CriterionOutcome out;
    out.passed = failed_ == 0;
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& f : failures_) os << "; FAILED " << f;
    out.detail = os.str();
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

CriterionOutcome morphism_fidelity() {
  const auto t0 = Clock::now();
  Tally t;
  const std::vector<std::string> g2_table = {"011220012201", "122001120012", "200112201120"};
  const std::vector<std::string> g5_table = {"001101110001010110010", "001101110001001110101",
                                             "001101110001001101010"};
  auto compare = [&](const Morphism& m, const std::vector<std::string>& table, std::size_t width) {
    t.require(m.source_alphabet_size() == table.size(), m.name() + " has 3 images");
    t.require(m.uniform_width() == width, m.name() + " width");
    for (std::size_t s = 0; s < table.size() && s < m.source_alphabet_size(); ++s) {
      t.require(m.images()[s].str() == table[s], m.name() + "(" + std::to_string(s) + ")");
    }
  };
  compare(g2(), g2_table, 12);
  compare(g5(), g5_table, 21);
  const double ms = since(t0) * 1e3;
  t.require(ms < 1.0, "runtime under 1 ms");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f ms", ms);
  t.note(buf);
  return t.outcome();
}

void require_certificate(Tally& t, const Certificate& c, std::size_t pstar,
                         const std::string& periods) {
  t.require(c.overall, "overall verdict");
  for (const auto& r : c.checks) t.require(r.passed, "check " + r.name);
  t.require(c.checks.size() == 4, "four checks");
  t.require(c.threshold == pstar, "p* = " + std::to_string(pstar));
  t.require(c.small_period_max == pstar - 1, "small_period_max = p* - 1");
  const auto* scan = c.check("palindrome_scan");
  t.require(scan && scan->parameters.at("periods") == periods, "scan covers " + periods);
  if (scan) {
    t.note("scan enumerated " + scan->parameters.at("enumerated_periods") + ", synchronized " +
           scan->parameters.at("synchronized_periods"));
  }
  t.note("factor_len " + std::to_string(c.factor_len));
}

CriterionOutcome g2_certificate() {
  Tally t;
  const auto c = certify_morphic_tree_coloring(g2(), g2_spec(), 8);
  require_certificate(t, c, 20, "[2, 19]");
  return t.outcome();
}

CriterionOutcome g5_certificate() {
  const auto t0 = Clock::now();
  Tally t;
  const auto c = certify_morphic_tree_coloring(g5(), g5_spec());
  require_certificate(t, c, 798, "[5, 797]");
  t.require(since(t0) < 30 * 60, "completes within 30 minutes");
  return t.outcome();
}

CriterionOutcome level_tree_oracle() {
  Tally t;
  const Word w3 = generate_powerfree_ternary(40);
  const Word img2 = apply_morphism(g2(), w3);
  const Word img5 = apply_morphism(g5(), w3);
  struct Case {
    const Word* image;
    std::size_t offset;
    std::size_t arity;
    std::size_t k;
    const char* label;
  };
  // offsets straddle image boundaries at different phases
  const std::vector<Case> cases = {
      {&img2, 0, 2, 2, "g2"},  {&img2, 7, 2, 2, "g2"},   {&img2, 18, 2, 2, "g2"},
      {&img5, 0, 1, 5, "g5"},  {&img5, 13, 1, 5, "g5"},  {&img5, 100, 1, 5, "g5"},
      {&img5, 0, 2, 5, "g5"},  {&img5, 29, 2, 5, "g5"},
  };
  std::uint64_t paths = 0;
  for (const auto& cs : cases) {
    const Word window = cs.image->slice(cs.offset, 13);
    const auto [tree, coloring] = build_level_tree(window, 12, cs.arity);
    const auto res = verify_coloring(tree, coloring, cs.k, tree.vertex_count());
    paths += res.paths;
    t.require(res.ok() && res.exhaustive,
              std::string(cs.label) + " depth 12 arity " + std::to_string(cs.arity) + " offset " +
                  std::to_string(cs.offset));
  }
  t.note(std::to_string(cases.size()) + " trees, " + std::to_string(paths) + " paths");
  return t.outcome();
}

bool has_square_from(const Word& w, std::size_t k) {
  return !oracle::find_squares(w, k, w.size() / 2).empty();
}

CriterionOutcome path_word_searches() {
  Tally t;
  SearchBudget budget;
  const auto a = extend_word_search(2, 1, 4, budget);
  t.require(!a.reached_target && !a.exhausted && a.word.size() == 3,
            "binary k=1 maximum length 3 (got " + std::to_string(a.word.size()) + ")");
  t.require(a.word.str() == "010", "least longest binary word is 010");
  const auto b = extend_word_search(3, 1, 1000, budget);
  t.require(b.reached_target && b.word.size() == 1000 && !has_square_from(b.word, 1),
            "ternary squarefree word of length 1000");
  const auto c = extend_word_search(2, 3, 1000, budget);
  t.require(c.reached_target && c.word.size() == 1000 && !has_square_from(c.word, 3),
            "binary word of length 1000 without squares of period >= 3");
  t.note("search nodes " + std::to_string(a.nodes) + "/" + std::to_string(b.nodes) + "/" +
         std::to_string(c.nodes));
  return t.outcome();
}

CriterionOutcome pi_k_exactness() {
  Tally t;
  SearchBudget budget;
  auto witness_ok = [](const Graph& g, const PiResult& r, std::size_t k) {
    if (r.witness.size() != g.vertex_count()) return false;
    const std::size_t used =
        g.vertex_count() == 0
            ? 0
            : *std::max_element(r.witness.colors.begin(), r.witness.colors.end()) + 1;
    const auto v = verify_coloring(g, r.witness, k, std::max(g.vertex_count(), 2 * k));
    return used <= r.upper && v.ok() && v.exhaustive;
  };
  for (std::size_t n = 4; n <= 14; ++n) {
    const auto g = path_graph(n);
    const auto r = pi_k_exact(g, 1, budget);
    t.require(r.exact() && r.upper == 3 && witness_ok(g, r, 1), "pi_1(P_" + std::to_string(n) + ") = 3");
  }
  // a single color only fails once a period-3 square fits, from 6 vertices on
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto g = path_graph(n);
    const auto r = pi_k_exact(g, 3, budget);
    const std::size_t expect = n < 6 ? 1 : 2;
    t.require(r.exact() && r.upper == expect && witness_ok(g, r, 3),
              "pi_3(P_" + std::to_string(n) + ") = " + std::to_string(expect));
  }
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_rooted_tree(n, [&](const std::vector<std::size_t>& levels) {
      ++trees;
      const auto g = tree_from_levels(levels);
      std::size_t prev = 0;
      for (std::size_t k = 1; k <= 5; ++k) {
        const auto r = pi_k_exact(g, k, budget);
        t.require(r.exact() && witness_ok(g, r, k), "exact pi_k on a tree");
        if (k > 1) t.require(r.upper <= prev, "pi_{k+1} <= pi_k on a tree with " + std::to_string(n) + " vertices");
        prev = r.upper;
      }
      return true;
    });
  }
  t.note("P_n with n < 6 needs one color at k=3");
  t.note(std::to_string(trees) + " rooted trees swept for k=1..5");
  return t.outcome();
}

CriterionOutcome proper_two_colorings_fail() {
  Tally t;
  for (std::size_t k = 1; k <= 4; ++k) {
    const std::size_t n = 4 * k;
    const auto g = path_graph(n);
    std::size_t proper = 0;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      std::vector<std::uint32_t> colors(n);
      for (std::size_t v = 0; v < n; ++v) colors[v] = (bits >> v) & 1U;
      bool is_proper = true;
      for (std::size_t v = 0; v + 1 < n; ++v) is_proper &= colors[v] != colors[v + 1];
      if (!is_proper) continue;
      ++proper;
      const auto res = verify_coloring(g, Coloring(colors, 2), k, n);
      t.require(!res.ok(), "proper 2-coloring of P_" + std::to_string(n) + " has a square of period >= " +
                               std::to_string(k));
    }
    t.require(proper == 2, "P_" + std::to_string(n) + " has exactly two proper 2-colorings");
  }
  return t.outcome();
}

CriterionOutcome construction_invariants() {
  Tally t;
  std::vector<Graph> stacked;
  for (std::size_t i = 0; i <= 7; ++i) stacked.push_back(stacked_triangulation(i));
  std::size_t pow3 = 1;
  for (std::size_t i = 0; i <= 6; ++i, pow3 *= 3) {
    const auto& g = stacked[i];
    const std::string tag = "G_" + std::to_string(i);
    const auto v = static_cast<long long>(g.vertex_count());
    const auto e = static_cast<long long>(g.edge_count());
    const auto f = static_cast<long long>(g.faces.size());
    t.require(v - e + f == 2, tag + " Euler formula");
    t.require(g.faces.size() == 4 * pow3, tag + " has 4*3^i faces");
    t.require(stacked[i + 1].vertex_count() == g.vertex_count() + g.faces.size(), tag + " vertex recurrence");
    t.require(check_3tree(g).passed(), tag + " is a 3-tree");
  }
  for (std::size_t i = 0; i <= 10; ++i) {
    const auto u = outerplanar_u(i);
    t.require(u.vertex_count() == (std::size_t{1} << i) + 1, "|V(U_" + std::to_string(i) + ")|");
    t.require(u.edge_count() == (std::size_t{1} << (i + 1)) - 1, "|E(U_" + std::to_string(i) + ")|");
  }
  std::vector<Graph> hs;
  hs.emplace_back(0);
  hs.emplace_back(1);
  hs.push_back(path_graph(3));
  hs.push_back(stacked_triangulation(0));
  for (const auto& h : hs) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto g = plus4_gadget(h, m);
      const std::size_t hv = h.vertex_count();
      const std::size_t he = h.edge_count();
      t.require(g.vertex_count() == 2 * m * (1 + hv) + 2, "plus4 vertex count");
      t.require(g.edge_count() == m + 2 * m * (he + hv) + 1 + 4 * m, "plus4 edge count");
    }
  }
  std::size_t witnesses = 0;
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t tt = 1; tt <= 4; ++tt) {
      const auto& host = stacked[i + tt];
      for (const auto& edge : stacked[i].edges()) {
        const auto path = fan_witness(host, i, edge, tt);
        ++witnesses;
        t.require(path.size() == tt && verify_fan_witness(host, i, edge, path).ok(),
                  "fan witness i=" + std::to_string(i) + " t=" + std::to_string(tt));
      }
    }
  }
  t.note(std::to_string(witnesses) + " fan witnesses verified");
  return t.outcome();
}

CriterionOutcome oracle_equivalence() {
  Tally t;
  std::uint64_t words = 0;
  std::uint64_t mismatches = 0;
  for (std::size_t len = 0; len <= 14; ++len) {
    Word w(3);
    std::vector<Symbol> digits(len, 0);
    while (true) {
      w = Word(digits, 3);
      ++words;
      const std::size_t half = std::max<std::size_t>(len / 2, 1);
      if (find_squares(w, 1, half) != oracle::find_squares(w, 1, half)) ++mismatches;
      std::size_t i = 0;
      while (i < len && ++digits[i] == 3) digits[i++] = 0;
      if (i == len) break;
    }
  }
  t.require(mismatches == 0, "find_squares agrees with the triple loop");
  t.note(std::to_string(words) + " ternary words");

  std::uint64_t cases = 0;
  mismatches = 0;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : oracle::graphs_up_to_iso(n)) {
      ++graphs;
      const auto paths = oracle::all_paths(g);
      for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        std::vector<std::uint32_t> colors(n);
        for (std::size_t v = 0; v < n; ++v) colors[v] = (bits >> v) & 1U;
        const Coloring c(colors, 2);
        for (std::size_t k = 1; k <= 3; ++k) {
          ++cases;
          const auto mine = verify_coloring(g, c, k, std::max(n, 2 * k));
          const auto ref = oracle::least_violating_path(paths, colors, k);
          const bool same = mine.ok() ? !ref : (ref && mine.violation->path == *ref);
          if (!same) ++mismatches;
        }
      }
    }
  }
  t.require(graphs == 1252, "1252 graphs on 1..7 vertices up to isomorphism");
  t.require(mismatches == 0, "verify_coloring agrees with the reference path scan");
  t.note(std::to_string(cases) + " coloring checks");
  return t.outcome();
}

std::vector<Criterion> build_criteria() {
  return {
      {"AC1", "morphism tables match", {"morphism", "g2", "g5"}, morphism_fidelity},
      {"AC2", "g2 certificate (k=2, p*=20)", {"treecert", "g2"}, g2_certificate},
      {"AC3", "g5 certificate (k=5, p*=798)", {"treecert", "g5"}, g5_certificate},
      {"AC4", "level trees pass path oracle", {"oracle", "g2", "g5", "tree"}, level_tree_oracle},
      {"AC5", "path word searches", {"search", "path", "word"}, path_word_searches},
      {"AC6", "pi_k exact on paths and trees", {"search", "pik", "path", "tree"}, pi_k_exactness},
      {"AC7", "proper 2-colorings of P_4k fail", {"search", "path", "coloring"}, proper_two_colorings_fail},
      {"AC8", "construction invariants", {"graphs", "construction"}, construction_invariants},
      {"AC9", "oracle equivalence", {"oracle", "words", "graphs"}, oracle_equivalence},
  };
}

}  // namespace

bool Criterion::matches(const std::string& filter) const {
  const auto f = lower(filter);
  if (lower(id) == f) return true;
  return std::any_of(tags.begin(), tags.end(), [&](const std::string& tag) { return tag == f; });
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = build_criteria();
  return all;
}

std::vector<CriterionResult> run_suite(const std::vector<std::string>& only,
                                       const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() &&
        std::none_of(only.begin(), only.end(), [&](const std::string& f) { return c.matches(f); })) {
      continue;
    }
    CriterionResult r{c.id, c.title, false, 0, {}};
    const auto t0 = Clock::now();
    try {
      const auto o = c.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(t0);
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%-4s %-34s %-4s %9.3fs  ", r.id.c_str(), r.title.c_str(),
                r.passed ? "PASS" : "FAIL", r.seconds);
  return head + r.detail;
}

void print_report(std::ostream& os, const std::vector<CriterionResult>& results) {
  std::size_t passed = 0;
  double total = 0;
  for (const auto& r : results) {
    os << format_result_line(r) << "\n";
    passed += r.passed;
    total += r.seconds;
  }
  char tail[96];
  std::snprintf(tail, sizeof tail, "%zu/%zu criteria passed in %.3fs", passed, results.size(), total);
  os << tail << "\n";
}

nlohmann::json report_json(const std::vector<CriterionResult>& results) {
  auto arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"criteria", std::move(arr)}, {"passed", all}};
}

}  // namespace nonrep
