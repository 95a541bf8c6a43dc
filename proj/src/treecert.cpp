#include "nonrep/treecert.hpp"

#include <algorithm>
#include <set>

#include "nonrep/errors.hpp"

namespace nonrep {
namespace {

std::string str(std::span<const Symbol> s) {
  std::string out;
  out.reserve(s.size());
  for (Symbol c : s) out.push_back(static_cast<char>('0' + c));
  return out;
}

std::string range(std::size_t lo, std::size_t hi) {
  if (lo > hi) return "none";
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Source words of length ceil(L / q) + 1 cover every length-L factor of an image.
std::size_t source_len_for_window(std::size_t window, std::size_t width) {
  return window == 0 ? 1 : ceil_div(window, width) + 1;
}

// Largest e with a crossing square still compatible with d-directedness:
// the e+1 symbols from s leftwards reappear reversed one period earlier.
std::size_t max_extension(std::size_t d) { return d >= 2 ? d - 2 : 0; }

std::size_t crossing_pairs(std::size_t period, std::size_t d) {
  return period - std::min(period - 1, max_extension(d));
}

}  // namespace

BranchCheckSpec g2_spec() {
  BranchCheckSpec s;
  s.k = 2;
  s.free_spec = PowerFreeSpec(Rational(19, 10), true, 2);
  s.directed_d = 3;
  return s;
}

BranchCheckSpec g5_spec() {
  BranchCheckSpec s;
  s.k = 5;
  s.free_spec = PowerFreeSpec(Rational(83, 42), true, 5);
  s.directed_d = 20;
  return s;
}

std::size_t directedness_threshold(const Rational& beta, std::size_t d) {
  if (beta < 1 || beta >= 2) {
    throw DomainError("directedness threshold needs 1 <= beta < 2, got " + to_string(beta));
  }
  if (d < 1) throw DomainError("directedness window must be at least 1");
  if (d == 1) return 1;
  // ceil((d - 1) / (2 - beta))
  const Rational bound = Rational(static_cast<std::int64_t>(d - 1)) / (Rational(2) - beta);
  return static_cast<std::size_t>(std::max<std::int64_t>(ceil(bound), 1));
}

std::optional<BranchSquare> branch_square_at(std::span<const Symbol> w, std::size_t j,
                                             std::size_t min_period,
                                             std::size_t max_period) {
  const std::size_t top = std::min(max_period, j);
  for (std::size_t p = std::max<std::size_t>(min_period, 1); p <= top; ++p) {
    // equal pairs w[j-t] == w[j-t-p] ending at s
    std::size_t run = 0;
    while (run < p && run + p <= j && w[j - run] == w[j - run - p]) ++run;
    if (run == p) return BranchSquare{p, 0};
    if (run == 0) continue;
    // the part right of s mirrors f: need w[j-v] == w[j-p+v] for v in [1, p-run]
    const std::size_t ext = p - run;
    bool mirrored = true;
    for (std::size_t v = 1; v <= ext && mirrored; ++v) mirrored = w[j - v] == w[j - p + v];
    if (mirrored) return BranchSquare{p, ext};
  }
  return std::nullopt;
}

BranchViolation make_branch_violation(std::span<const Symbol> w, std::size_t alphabet,
                                      std::size_t j, std::size_t max_period,
                                      const BranchSquare& sq) {
  const std::size_t left = std::min(j, 2 * max_period);
  std::vector<Symbol> window(w.begin() + static_cast<std::ptrdiff_t>(j - left),
                             w.begin() + static_cast<std::ptrdiff_t>(j + 1));
  for (std::size_t t = 1; t <= left; ++t) window.push_back(w[j - t]);
  const std::size_t p = sq.period;
  const std::size_t start = left + sq.extension + 1 - 2 * p;
  return {j, Word(std::move(window), alphabet), Repetition{start, 2 * p, p}};
}

Verdict<BranchViolation> branch_palindrome_scan(const Word& w, std::size_t k,
                                                std::size_t max_period) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (k > max_period) return {};
  const auto s = w.symbols();
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (auto sq = branch_square_at(s, j, k, max_period)) {
      return {make_branch_violation(s, w.alphabet_size(), j, max_period, *sq)};
    }
  }
  return {};
}

std::optional<std::size_t> SyncProfile::max_lifted_run(std::size_t period) const {
  if (width == 0 || period % width != 0) return std::nullopt;
  const std::size_t lifted = period / width;
  const std::size_t source_run = dejean_ternary_spec().forbidden_run(lifted) - 1;
  return source_run * width + common_suffix + common_prefix;
}

bool SyncProfile::excludes(std::size_t period, std::size_t pairs) const {
  if (!injective || !synchronizing || pairs < min_lifted_run()) return false;
  const auto bound = max_lifted_run(period);
  return !bound || pairs > *bound;
}

SyncProfile analyze_synchronization(const Morphism& m) {
  SyncProfile out;
  out.width = m.uniform_width();
  if (out.width == 0) throw DomainError("morphism must have nonempty images");
  const auto& images = m.images();
  const std::size_t a = images.size();

  out.injective = true;
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t y = x + 1; y < a; ++y) {
      const auto ix = images[x].symbols();
      const auto iy = images[y].symbols();
      if (images[x] == images[y]) {
        out.injective = false;
        out.detail = "images of " + std::to_string(x) + " and " + std::to_string(y) + " coincide";
        continue;
      }
      std::size_t lcp = 0;
      while (lcp < out.width && ix[lcp] == iy[lcp]) ++lcp;
      std::size_t lcs = 0;
      while (lcs < out.width && ix[out.width - 1 - lcs] == iy[out.width - 1 - lcs]) ++lcs;
      out.common_prefix = std::max(out.common_prefix, lcp);
      out.common_suffix = std::max(out.common_suffix, lcs);
    }
  }
  if (!out.injective) return out;

  std::vector<Word> pairs;
  for_each_powerfree(a, dejean_ternary_spec(), 2, [&](const Word& w) {
    pairs.push_back(w);
    return true;
  });
  out.synchronizing = true;
  for (const auto& bc : pairs) {
    std::vector<Symbol> joined(images[bc[0]].symbols().begin(), images[bc[0]].symbols().end());
    joined.insert(joined.end(), images[bc[1]].symbols().begin(), images[bc[1]].symbols().end());
    for (std::size_t x = 0; x < a && out.synchronizing; ++x) {
      const auto img = images[x].symbols();
      for (std::size_t off = 1; off < out.width; ++off) {
        if (std::equal(img.begin(), img.end(), joined.begin() + static_cast<std::ptrdiff_t>(off))) {
          out.synchronizing = false;
          out.detail = "image of " + std::to_string(x) + " occurs inside the image of " +
                       bc.str() + " at offset " + std::to_string(off);
          break;
        }
      }
    }
    if (!out.synchronizing) break;
  }
  return out;
}

CoveragePlan plan_coverage(const Morphism& m, const BranchCheckSpec& spec,
                           const SyncProfile& sync) {
  CoveragePlan plan;
  const auto& fs = spec.free_spec;
  const std::size_t q = m.uniform_width();
  const std::size_t n = fs.min_period;
  plan.threshold = directedness_threshold(fs.exponent_bound, spec.directed_d);
  const bool lifts = sync.injective && sync.synchronizing;
  const Rational source_beta = dejean_ternary_spec().exponent_bound;

  std::size_t window = spec.directed_d;

  // Freeness: beyond `horizon` every forbidden run is long enough to lift and
  // longer than any lifted run, so only periods below it need enumeration.
  plan.freeness_enumerated_max = n - 1;
  if (lifts && fs.exponent_bound > source_beta) {
    const Rational slack = fs.exponent_bound - source_beta;
    const auto by_bound = static_cast<std::size_t>(
        floor(Rational(static_cast<std::int64_t>(sync.common_prefix + sync.common_suffix)) / slack) + 1);
    const auto by_lift = static_cast<std::size_t>(
        ceil(Rational(static_cast<std::int64_t>(sync.min_lifted_run())) / (fs.exponent_bound - 1)));
    const std::size_t horizon = std::max({by_bound, by_lift, n});
    for (std::size_t p = n; p <= horizon; ++p) {
      const std::size_t need = fs.forbidden_run(p);
      if (!sync.excludes(p, need)) {
        plan.freeness_enumerated_max = p;
        window = std::max(window, p + need);
      }
    }
    plan.freeness_closed = true;
  }

  // Branch scan over [k, p* - 1]; with d-directedness a crossing square
  // reaches at most d - 2 symbols past s.
  plan.scan_enumerated_max = spec.k - 1;
  for (std::size_t p = spec.k; p < plan.threshold; ++p) {
    if (!lifts || !sync.excludes(p, crossing_pairs(p, spec.directed_d))) {
      plan.scan_enumerated_max = p;
    }
  }
  if (plan.scan_enumerated_max >= spec.k) {
    window = std::max(window, 2 * plan.scan_enumerated_max);
  }
  plan.min_factor_len = source_len_for_window(window, q);
  return plan;
}

const CheckRecord* Certificate::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

struct Sweep {
  const Morphism& m;
  const BranchCheckSpec& spec;
  std::size_t depth;
  std::size_t scan_max;

  Word source{3};
  std::vector<Symbol> image;
  std::size_t source_words = 0;
  std::size_t positions = 0;
  std::optional<std::map<std::string, std::string>> power_cex;
  std::optional<std::map<std::string, std::string>> scan_cex;
  std::set<std::vector<Symbol>> dfactors;

  void check_position(std::size_t j) {
    ++positions;
    const std::span<const Symbol> prefix(image.data(), j + 1);
    if (!power_cex) {
      if (auto rep = suffix_violation(prefix, spec.free_spec)) {
        power_cex = std::map<std::string, std::string>{
            {"source", source.str()},
            {"image_position", std::to_string(j)},
            {"repetition", to_string(*rep)},
            {"factor", str(prefix.subspan(rep->start, rep->length))}};
      }
    }
    if (!scan_cex && spec.k <= scan_max) {
      if (auto sq = branch_square_at(prefix, j, spec.k, scan_max)) {
        const auto v = make_branch_violation(prefix, m.target_alphabet_size(), j, scan_max, *sq);
        scan_cex = std::map<std::string, std::string>{
            {"source", source.str()},
            {"position", std::to_string(j)},
            {"window", v.window.str()},
            {"repetition", to_string(v.square)},
            {"square", v.window.slice(v.square.start, v.square.length).str()}};
      }
    }
    const std::size_t d = spec.directed_d;
    if (j + 1 >= d) dfactors.emplace(image.begin() + static_cast<std::ptrdiff_t>(j + 1 - d),
                                     image.begin() + static_cast<std::ptrdiff_t>(j + 1));
  }

  void run() {
    const auto src_spec = dejean_ternary_spec();
    const std::size_t q = m.uniform_width();
    auto dfs = [&](auto&& self) -> void {
      if (source.size() == depth) {
        ++source_words;
        return;
      }
      for (Symbol a = 0; a < 3; ++a) {
        source.push_back(a);
        if (!suffix_violation(source.symbols(), src_spec)) {
          const auto img = m.image(a).symbols();
          const std::size_t base = image.size();
          image.insert(image.end(), img.begin(), img.end());
          for (std::size_t j = base; j < base + q; ++j) check_position(j);
          self(self);
          image.resize(base);
        }
        source.pop_back();
      }
    };
    dfs(dfs);
  }
};

}  // namespace

Certificate certify_morphic_tree_coloring(const Morphism& m, const BranchCheckSpec& spec,
                                          std::optional<std::size_t> factor_len) {
  if (m.source_alphabet_size() != 3) {
    throw ConfigError("certificates take images of ternary words; morphism has " +
                      std::to_string(m.source_alphabet_size()) + " source symbols");
  }
  if (m.uniform_width() == 0) throw ConfigError("morphism images are empty");
  if (spec.k < 1) throw ConfigError("k must be at least 1");
  if (spec.directed_d < 1) throw ConfigError("d must be at least 1");

  const auto sync = analyze_synchronization(m);
  CoveragePlan plan;
  try {
    plan = plan_coverage(m, spec, sync);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  const std::size_t flen = factor_len.value_or(plan.min_factor_len);
  if (flen < plan.min_factor_len) {
    throw ConfigError("factor_len " + std::to_string(flen) + " is too small; minimum is " +
                          std::to_string(plan.min_factor_len),
                      static_cast<long long>(plan.min_factor_len));
  }

  const auto& fs = spec.free_spec;
  const std::size_t q = m.uniform_width();
  const std::size_t pstar = plan.threshold;

  Sweep sweep{m, spec, flen, pstar - 1, Word(3), {}, 0, 0, {}, {}, {}};
  sweep.run();

  Certificate cert;
  cert.morphism = m;
  cert.spec = spec;
  cert.factor_len = flen;
  cert.threshold = pstar;
  cert.small_period_max = pstar - 1;
  const std::size_t covered = (flen - 1) * q + 1;  // every image factor this long is seen

  {
    CheckRecord c;
    c.name = "power_free";
    std::size_t enumerated = plan.freeness_enumerated_max;
    if (!plan.freeness_closed) {
      enumerated = fs.min_period - 1;
      for (std::size_t p = fs.min_period; p + fs.forbidden_run(p) <= covered; ++p) enumerated = p;
    }
    c.parameters = {{"beta", to_string(fs.exponent_bound)},
                    {"strict", fs.strict ? "true" : "false"},
                    {"n", std::to_string(fs.min_period)},
                    {"source_words", std::to_string(sweep.source_words)},
                    {"covered_factor_length", std::to_string(covered)},
                    {"enumerated_periods", range(fs.min_period, enumerated)},
                    {"synchronized_periods",
                     plan.freeness_closed ? "[" + std::to_string(enumerated + 1) + ", inf)" : "none"}};
    c.counterexample = sweep.power_cex;
    c.passed = !sweep.power_cex && plan.freeness_closed;
    if (!plan.freeness_closed) {
      c.parameters["status"] = "periods above " + std::to_string(enumerated) +
                               " not established: " +
                               (sync.injective && sync.synchronizing
                                    ? std::string("beta does not exceed 7/4")
                                    : "morphism is not synchronizing (" + sync.detail + ")");
    }
    cert.checks.push_back(std::move(c));
  }

  bool directed_ok = true;
  {
    CheckRecord c;
    c.name = "directed";
    c.parameters = {{"d", std::to_string(spec.directed_d)},
                    {"distinct_factors", std::to_string(sweep.dfactors.size())}};
    for (const auto& f : sweep.dfactors) {
      std::vector<Symbol> r(f.rbegin(), f.rend());
      if (sweep.dfactors.count(r)) {
        c.counterexample = std::map<std::string, std::string>{{"factor", str(f)},
                                                              {"reversed", str(r)}};
        break;
      }
    }
    c.passed = !c.counterexample;
    directed_ok = c.passed;
    cert.checks.push_back(std::move(c));
  }

  {
    CheckRecord c;
    c.name = "threshold";
    c.parameters = {{"beta", to_string(fs.exponent_bound)},
                    {"d", std::to_string(spec.directed_d)},
                    {"p_star", std::to_string(pstar)},
                    {"small_period_max", std::to_string(pstar - 1)}};
    // freeness must reach down to every period the threshold argument handles
    c.passed = fs.min_period <= std::max(spec.k, pstar);
    if (!c.passed) {
      c.parameters["status"] = "n exceeds max(k, p*): periods in [max(k, p*), n) uncovered";
    }
    cert.checks.push_back(std::move(c));
  }

  {
    CheckRecord c;
    c.name = "palindrome_scan";
    const std::size_t window_max = std::min(pstar - 1, (covered) / 2);
    const std::size_t enumerated = std::max(plan.scan_enumerated_max, window_max);
    const std::size_t enum_top = std::min(enumerated, pstar - 1);
    const bool lifted = enum_top + 1 <= pstar - 1;
    c.parameters = {{"k", std::to_string(spec.k)},
                    {"periods", range(spec.k, pstar - 1)},
                    {"enumerated_periods", range(spec.k, enum_top)},
                    {"synchronized_periods", lifted ? range(std::max(enum_top + 1, spec.k), pstar - 1) : "none"}};
    if (lifted) c.parameters["relies_on"] = "directed, power_free";
    c.counterexample = sweep.scan_cex;
    c.passed = !sweep.scan_cex && (!lifted || directed_ok);
    if (lifted && !directed_ok) {
      c.parameters["status"] = "synchronized periods need the directedness check";
    }
    cert.checks.push_back(std::move(c));
  }

  cert.overall = std::all_of(cert.checks.begin(), cert.checks.end(),
                             [](const CheckRecord& c) { return c.passed; });
  return cert;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  auto images = nlohmann::json::array();
  for (const auto& img : c.morphism.images()) images.push_back(img.str());
  j["morphism"] = {{"name", c.morphism.name()},
                   {"images", std::move(images)},
                   {"width", c.morphism.uniform_width()},
                   {"target_alphabet", c.morphism.target_alphabet_size()}};
  j["spec"] = {{"k", c.spec.k},
               {"beta", to_string(c.spec.free_spec.exponent_bound)},
               {"strict", c.spec.free_spec.strict},
               {"n", c.spec.free_spec.min_period},
               {"d", c.spec.directed_d}};
  j["factor_len"] = c.factor_len;
  j["threshold"] = c.threshold;
  j["small_period_max"] = c.small_period_max;
  auto checks = nlohmann::json::array();
  for (const auto& r : c.checks) {
    nlohmann::json cj = {{"name", r.name}, {"parameters", r.parameters}, {"passed", r.passed}};
    cj["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json();
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["overall"] = c.overall;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    const auto& mj = j.at("morphism");
    const auto alphabet = mj.at("target_alphabet").get<std::size_t>();
    std::vector<Word> images;
    for (const auto& s : mj.at("images")) images.push_back(Word::parse(s.get<std::string>(), alphabet));
    c.morphism = Morphism(mj.at("name").get<std::string>(), std::move(images));
    const auto& sj = j.at("spec");
    c.spec.k = sj.at("k").get<std::size_t>();
    c.spec.free_spec = PowerFreeSpec(parse_rational(sj.at("beta").get<std::string>()),
                                     sj.at("strict").get<bool>(), sj.at("n").get<std::size_t>());
    c.spec.directed_d = sj.at("d").get<std::size_t>();
    c.factor_len = j.at("factor_len").get<std::size_t>();
    c.threshold = j.at("threshold").get<std::size_t>();
    c.small_period_max = j.at("small_period_max").get<std::size_t>();
    for (const auto& cj : j.at("checks")) {
      CheckRecord r;
      r.name = cj.at("name").get<std::string>();
      r.parameters = cj.at("parameters").get<std::map<std::string, std::string>>();
      r.passed = cj.at("passed").get<bool>();
      if (!cj.at("counterexample").is_null()) {
        r.counterexample = cj["counterexample"].get<std::map<std::string, std::string>>();
      }
      c.checks.push_back(std::move(r));
    }
    c.overall = j.at("overall").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate JSON: ") + e.what());
  }
}

std::pair<Graph, Coloring> build_level_tree(const Word& w, std::size_t depth,
                                            std::size_t arity) {
  if (w.size() < depth + 1) {
    throw DomainError("level tree of depth " + std::to_string(depth) + " needs a word of length " +
                      std::to_string(depth + 1));
  }
  if (arity < 1) throw DomainError("arity must be at least 1");
  std::size_t total = 0;
  std::size_t width = 1;
  for (std::size_t level = 0; level <= depth; ++level) {
    total += width;
    if (total > (std::size_t{1} << 26)) throw ConfigError("level tree exceeds vertex budget");
    width *= arity;
  }
  Graph g(1);
  g.family = "level_tree";
  g.levels.push_back(0);
  std::vector<std::uint32_t> colors{w[depth]};
  std::vector<Vertex> frontier{0};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<Vertex> next;
    next.reserve(frontier.size() * arity);
    for (Vertex parent : frontier) {
      for (std::size_t c = 0; c < arity; ++c) {
        const Vertex v = g.add_vertex();
        g.add_edge(parent, v);
        g.levels.push_back(level);
        colors.push_back(w[depth - level]);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return {std::move(g), Coloring(std::move(colors), std::max<std::size_t>(w.alphabet_size(), 1))};
}

}  // namespace nonrep
