// nonrep: command-line front end for words, certificates, graphs and searches.
//
// Exit status: 0 success or pass, 1 a check failed (the counterexample is
// printed), 2 usage, configuration or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nonrep/errors.hpp"
#include "nonrep/graphs.hpp"
#include "nonrep/paths.hpp"
#include "nonrep/repetitions.hpp"
#include "nonrep/search.hpp"
#include "nonrep/suite.hpp"
#include "nonrep/treecert.hpp"
#include "nonrep/words.hpp"

using nlohmann::json;
using namespace nonrep;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Input files that cannot be read or parsed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// Counts: plain integers, integral a/b, or mantissa-exponent forms such as 1e8.
std::uint64_t parse_count(const std::string& text) {
  static const std::regex sci(R"(([0-9]+)[eE]([0-9]+))");
  std::smatch m;
  std::uint64_t value = 0;
  if (std::regex_match(text, m, sci)) {
    value = std::stoull(m[1]);
    const int exp = std::stoi(m[2]);
    for (int i = 0; i < exp; ++i) {
      if (value > UINT64_MAX / 10) throw ConfigError("count out of range: " + text);
      value *= 10;
    }
  } else {
    const Rational r = parse_rational(text);
    if (r.denominator() != 1 || r.numerator() < 0) throw ConfigError("not a whole count: " + text);
    value = static_cast<std::uint64_t>(r.numerator());
  }
  if (value == 0) throw ConfigError("count must be positive: " + text);
  return value;
}

double parse_seconds(const std::string& text) {
  const Rational r = parse_rational(text);
  if (r <= 0) throw ConfigError("time limit must be positive: " + text);
  return boost::rational_cast<double>(r);
}

std::string default_budget_nodes() {
  if (const char* env = std::getenv("NONREP_BUDGET_NODES")) return env;
  return "100000000";
}

// Words from the positional arguments, or one per line from --input / stdin.
std::vector<Word> read_words(const std::vector<std::string>& args, const std::string& input,
                             std::optional<std::size_t> alphabet) {
  std::vector<std::string> lines = args;
  if (lines.empty()) {
    std::string text;
    if (input.empty() || input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      text = read_file(input);
    }
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
  }
  std::vector<Word> out;
  for (const auto& l : lines) {
    try {
      out.push_back(alphabet ? Word::parse(l, *alphabet) : Word::parse(l));
    } catch (const DomainError& e) {
      throw InputError("bad word '" + l + "': " + e.what());
    }
  }
  return out;
}

Morphism load_morphism(const std::string& spec) {
  if (spec == "g2" || spec == "g5") return named_morphism(spec);
  try {
    return Morphism::parse(read_file(spec), spec);
  } catch (const DomainError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json(path));
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Coloring load_coloring(const std::string& path) {
  try {
    return coloring_from_json(read_json(path));
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Small named graphs for the plus4 gadget: empty<n>, K<n>, P<n>, or a JSON file.
Graph named_or_file_graph(const std::string& spec) {
  static const std::regex named(R"((empty|K|P)([0-9]+))");
  std::smatch m;
  if (std::regex_match(spec, m, named)) {
    const std::size_t n = std::stoul(m[2]);
    Graph g(n);
    if (m[1] == "K") {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      }
    } else if (m[1] == "P") {
      for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    }
    return g;
  }
  return load_graph(spec);
}

json repetition_json(const Repetition& r) {
  return {{"start", r.start}, {"length", r.length}, {"period", r.period},
          {"exponent", to_string(r.exponent())}};
}

struct Options {
  bool json_out = false;
  std::string output;

  // word
  std::size_t length = 0;
  std::size_t lookahead = kDefaultLookahead;
  std::vector<std::string> words;
  std::string input;
  std::optional<std::size_t> alphabet;
  std::string beta = "2";
  bool strict = false;
  std::size_t n = 1;
  std::size_t d = 1;

  // morphism / treecert
  std::string morphism = "g2";
  std::size_t k = 1;
  std::optional<std::size_t> factor_len;
  bool non_strict = false;
  // unset values come from the built-in spec of g2 / g5
  std::optional<std::size_t> cert_k, cert_n, cert_d;
  std::optional<std::string> cert_beta;

  // graph
  std::string family;
  std::size_t size = 1;
  std::size_t m = 1;
  std::string h = "K1";
  std::size_t levels = 0;
  std::size_t path_len = 1;
  std::string graph_file;
  std::string coloring_file;
  std::optional<std::size_t> max_path;
  std::string max_paths;

  // search
  std::size_t max_colors = 10;
  std::string budget_nodes = default_budget_nodes();
  std::string time_limit = "600";
  std::size_t colors = 2;
  std::size_t max_depth = 3;
  std::size_t max_arity = 2;
  std::size_t max_vertices = 24;

  // suite
  std::vector<std::string> only;
};

SearchBudget budget_from(const Options& o) {
  SearchBudget b;
  b.node_limit = parse_count(o.budget_nodes);
  b.time_limit_seconds = parse_seconds(o.time_limit);
  b.max_colors = o.max_colors;
  b.validate();
  return b;
}

int emit(const Options& o, const json& j, const std::string& text) {
  write_output(o.output, o.json_out ? j.dump(2) + "\n" : text);
  return kPass;
}

int cmd_word_gen(const Options& o) {
  const Word w = generate_powerfree_ternary(o.length, o.lookahead);
  emit(o, {{"word", w.str()}, {"length", w.size()}}, w.str() + "\n");
  return kPass;
}

int cmd_word_check_free(const Options& o) {
  const PowerFreeSpec spec(parse_rational(o.beta), o.strict, o.n);
  int status = kPass;
  auto results = json::array();
  std::string text;
  for (const auto& w : read_words(o.words, o.input, o.alphabet)) {
    const auto v = is_power_free(w, spec);
    json r = {{"word", w.str()}, {"passed", v.passed()}};
    if (v.passed()) {
      text += "pass " + w.str() + "\n";
    } else {
      status = kCheckFailed;
      r["counterexample"] = repetition_json(*v.counterexample);
      text += "fail " + w.str() + " " + to_string(*v.counterexample) + "\n";
    }
    results.push_back(std::move(r));
  }
  emit(o, {{"spec", {{"beta", to_string(spec.exponent_bound)}, {"strict", spec.strict}, {"n", spec.min_period}}},
           {"results", results}},
       text);
  return status;
}

int cmd_word_check_directed(const Options& o) {
  int status = kPass;
  auto results = json::array();
  std::string text;
  for (const auto& w : read_words(o.words, o.input, o.alphabet)) {
    const auto v = is_d_directed(w, o.d);
    json r = {{"word", w.str()}, {"passed", v.passed()}};
    if (v.passed()) {
      text += "pass " + w.str() + "\n";
    } else {
      status = kCheckFailed;
      const auto& cex = *v.counterexample;
      r["counterexample"] = {{"factor", cex.factor.str()}, {"reversed", cex.reversed.str()},
                             {"position", cex.position}};
      text += "fail " + w.str() + " factor=" + cex.factor.str() + " reversed=" + cex.reversed.str() + "\n";
    }
    results.push_back(std::move(r));
  }
  emit(o, {{"d", o.d}, {"results", results}}, text);
  return status;
}

int cmd_morphism_apply(const Options& o) {
  const Morphism m = load_morphism(o.morphism);
  auto results = json::array();
  std::string text;
  for (const auto& w : read_words(o.words, o.input, m.source_alphabet_size())) {
    const Word img = apply_morphism(m, w);
    results.push_back({{"word", w.str()}, {"image", img.str()}});
    text += img.str() + "\n";
  }
  emit(o, {{"morphism", m.name()}, {"results", results}}, text);
  return kPass;
}

int cmd_treecert(const Options& o) {
  BranchCheckSpec spec;
  if (o.morphism == "g2" || o.morphism == "g5") {
    spec = o.morphism == "g2" ? g2_spec() : g5_spec();
  } else if (!o.cert_k || !o.cert_beta || !o.cert_n || !o.cert_d) {
    throw ConfigError("a custom morphism needs --k, --beta, --n and --d");
  }
  spec.k = o.cert_k.value_or(spec.k);
  const Rational beta = o.cert_beta ? parse_rational(*o.cert_beta) : spec.free_spec.exponent_bound;
  spec.free_spec = PowerFreeSpec(beta, !o.non_strict, o.cert_n.value_or(spec.free_spec.min_period));
  spec.directed_d = o.cert_d.value_or(spec.directed_d);
  const Certificate cert = certify_morphic_tree_coloring(load_morphism(o.morphism), spec, o.factor_len);
  std::ostringstream text;
  text << "morphism " << cert.morphism.name() << "  factor_len " << cert.factor_len << "  p* "
       << cert.threshold << "\n";
  for (const auto& c : cert.checks) {
    text << (c.passed ? "PASS " : "FAIL ") << c.name;
    for (const auto& [key, value] : c.parameters) text << "  " << key << "=" << value;
    text << "\n";
    if (c.counterexample) {
      for (const auto& [key, value] : *c.counterexample) text << "    " << key << ": " << value << "\n";
    }
  }
  text << (cert.overall ? "overall: pass\n" : "overall: fail\n");
  // the certificate document is JSON; --json sends it to stdout as well
  if (!o.output.empty() && o.output != "-") {
    write_output(o.output, to_json(cert).dump(2) + "\n");
    if (!o.json_out) std::cout << text.str();
  } else {
    std::cout << (o.json_out ? to_json(cert).dump(2) + "\n" : text.str());
  }
  return cert.overall ? kPass : kCheckFailed;
}

int cmd_graph_gen(const Options& o) {
  Graph g;
  if (o.family == "path") {
    g = path_graph(o.size);
  } else if (o.family == "stacked") {
    g = stacked_triangulation(o.size);
  } else if (o.family == "outeru") {
    g = outerplanar_u(o.size);
  } else if (o.family == "plus4") {
    g = plus4_gadget(named_or_file_graph(o.h), o.m);
  } else if (o.family == "leveled") {
    g = leveled_outerplanar(o.levels, o.path_len);
  } else {
    throw ConfigError("unknown family " + o.family);
  }
  write_output(o.output, to_json(g).dump(o.json_out ? 2 : -1) + "\n");
  return kPass;
}

int cmd_graph_verify(const Options& o) {
  const Graph g = load_graph(o.graph_file);
  const Coloring c = load_coloring(o.coloring_file);
  const std::size_t max_path = o.max_path.value_or(std::max(g.vertex_count(), 2 * o.k));
  const std::uint64_t max_paths = o.max_paths.empty() ? 0 : parse_count(o.max_paths);
  const auto res = verify_coloring(g, c, o.k, max_path, max_paths);
  json j = {{"ok", res.ok()}, {"paths", res.paths}, {"truncated", res.truncated},
            {"exhaustive", res.exhaustive}, {"k", o.k}};
  std::ostringstream text;
  if (res.ok()) {
    text << "ok  paths=" << res.paths << (res.exhaustive ? "  exhaustive" : "  not exhaustive")
         << (res.truncated ? "  truncated" : "") << "\n";
  } else {
    const auto& v = *res.violation;
    j["violation"] = {{"path", v.path}, {"square", repetition_json(v.square)}};
    text << "violation  path=";
    for (std::size_t i = 0; i < v.path.size(); ++i) text << (i ? "," : "") << v.path[i];
    text << "  " << to_string(v.square) << "\n";
  }
  emit(o, j, text.str());
  return res.ok() ? kPass : kCheckFailed;
}

int cmd_search_pik(const Options& o) {
  const Graph g = load_graph(o.graph_file);
  const auto r = pi_k_exact(g, o.k, budget_from(o));
  json j = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}, {"exhausted", r.exhausted},
            {"nodes", r.nodes}, {"witness", to_json(r.witness)}, {"k", o.k}};
  if (r.exact()) j["value"] = r.upper;
  std::ostringstream text;
  if (r.exact()) {
    text << "pi_" << o.k << " = " << r.upper;
  } else {
    text << r.lower << " <= pi_" << o.k << " <= " << r.upper;
  }
  text << "  nodes=" << r.nodes << (r.exhausted ? "  budget exhausted" : "") << "\n";
  emit(o, j, text.str());
  return kPass;
}

int cmd_search_word(const Options& o) {
  const auto r = extend_word_search(o.alphabet.value_or(2), o.k, o.length, budget_from(o));
  json j = {{"word", r.word.str()}, {"length", r.word.size()}, {"reached_target", r.reached_target},
            {"exhausted", r.exhausted}, {"nodes", r.nodes}};
  std::ostringstream text;
  text << r.word.str() << "\n"
       << "length=" << r.word.size()
       << (r.reached_target ? "  target reached" : r.exhausted ? "  budget exhausted" : "  maximum length")
       << "  nodes=" << r.nodes << "\n";
  emit(o, j, text.str());
  return kPass;
}

int cmd_search_tree_witness(const Options& o) {
  const auto r = tree_witness_search(o.k, o.colors, o.max_depth, o.max_arity, budget_from(o), o.max_vertices);
  const bool found = r.outcome == SearchOutcome::found;
  json j = {{"found", found}, {"status", found ? "witness" : "inconclusive"}, {"shapes", r.shapes},
            {"nodes", r.nodes}};
  std::ostringstream text;
  if (found) {
    j["tree"] = to_json(*r.tree);
    j["parents"] = r.parents;
    j["unsat"] = {{"colors", o.colors}, {"k", o.k}, {"nodes", r.refutation_nodes},
                  {"method", "exhaustive backtracking"}};
    text << "witness on " << r.tree->vertex_count() << " vertices, parents:";
    for (std::size_t v = 1; v < r.parents.size(); ++v) text << " " << r.parents[v];
    text << "\nno " << o.colors << "-coloring avoids squares of period >= " << o.k << " ("
         << r.refutation_nodes << " nodes)\n";
  } else {
    text << "inconclusive after " << r.shapes << " shapes, " << r.nodes << " nodes\n";
  }
  emit(o, j, text.str());
  return kPass;
}

int cmd_suite_run(const Options& o) {
  const auto results = run_suite(o.only, [&](const CriterionResult& r) {
    if (!o.json_out) std::cout << format_result_line(r) << std::endl;
  });
  bool all = !results.empty();
  for (const auto& r : results) all = all && r.passed;
  if (o.json_out) {
    std::cout << report_json(results).dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
  }
  return all ? kPass : kCheckFailed;
}

void add_word_inputs(CLI::App* cmd, Options& o) {
  cmd->add_option("words", o.words, "Words as digit strings (default: one per line from --input or stdin)");
  cmd->add_option("--input,-i", o.input, "File with one word per line");
  cmd->add_option("--alphabet", o.alphabet, "Alphabet size (default: max symbol + 1)");
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-nodes", o.budget_nodes, "Search node limit, e.g. 1e8 (env NONREP_BUDGET_NODES)");
  cmd->add_option("--time-limit", o.time_limit, "Time limit in seconds");
  cmd->add_option("--max-colors", o.max_colors, "Largest palette tried")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-repetitive colorings: words, certificates, graphs and searches"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_option("--output,-o", o.output, "Write the main result to this file");

  std::function<int()> action;
  auto on = [&](CLI::App* cmd, int (*fn)(const Options&)) {
    cmd->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; });
  };

  auto* word = app.add_subcommand("word", "Power-free word generation and checks");
  word->require_subcommand(1);
  auto* gen = word->add_subcommand("gen", "Least extendable (7/4+)-free ternary word");
  gen->add_option("--length,-n", o.length, "Word length")->required();
  gen->add_option("--lookahead", o.lookahead, "Extension margin proving extendability");
  on(gen, cmd_word_gen);
  auto* free = word->add_subcommand("check-free", "Check (beta+, n)-freeness");
  free->add_option("--beta", o.beta, "Exponent bound as a/b")->required();
  free->add_flag("--strict", o.strict, "Forbid exponents > beta (default forbids >= beta)");
  free->add_option("--n", o.n, "Minimum period")->check(CLI::PositiveNumber);
  add_word_inputs(free, o);
  on(free, cmd_word_check_free);
  auto* directed = word->add_subcommand("check-directed", "Check d-directedness");
  directed->add_option("--d", o.d, "Factor length")->required()->check(CLI::PositiveNumber);
  add_word_inputs(directed, o);
  on(directed, cmd_word_check_directed);

  auto* morph = app.add_subcommand("morphism", "Uniform morphisms");
  morph->require_subcommand(1);
  auto* apply = morph->add_subcommand("apply", "Image of words under a morphism");
  apply->add_option("--morphism,-m", o.morphism, "g2, g5, or a file of 'symbol -> image' lines");
  apply->add_option("words", o.words, "Source words");
  apply->add_option("--input,-i", o.input, "File with one word per line");
  on(apply, cmd_morphism_apply);

  auto* cert = app.add_subcommand("treecert", "Certify a morphic level coloring of trees");
  cert->require_subcommand(0, 1);
  auto add_cert_opts = [&](CLI::App* c) {
    c->add_option("--morphism,-m", o.morphism, "g2, g5, or a file of 'symbol -> image' lines");
    c->add_option("--k", o.cert_k, "Forbid squares of period >= k")->check(CLI::PositiveNumber);
    c->add_option("--beta", o.cert_beta, "Freeness exponent bound as a/b");
    c->add_flag("--non-strict", o.non_strict, "Forbid exponents >= beta instead of > beta");
    c->add_option("--n", o.cert_n, "Freeness minimum period")->check(CLI::PositiveNumber);
    c->add_option("--d", o.cert_d, "Directedness window")->check(CLI::PositiveNumber);
    c->add_option("--factor-len", o.factor_len, "Source word length (default: smallest admissible)");
  };
  add_cert_opts(cert);
  auto* certify = cert->add_subcommand("certify", "Run the four certificate checks");
  on(cert, cmd_treecert);
  on(certify, cmd_treecert);

  auto* graph = app.add_subcommand("graph", "Graph families and coloring checks");
  graph->require_subcommand(1);
  auto* ggen = graph->add_subcommand("gen", "Generate a graph as JSON");
  ggen->add_option("--family", o.family, "path | stacked | outeru | plus4 | leveled")
      ->required()
      ->check(CLI::IsMember({"path", "stacked", "outeru", "plus4", "leveled"}));
  ggen->add_option("--n,--i", o.size, "Path length, or the index i of G_i / U_i");
  ggen->add_option("--m", o.m, "plus4: matching size")->check(CLI::PositiveNumber);
  ggen->add_option("--inner", o.h, "plus4: the graph H as emptyN, KN, PN or a graph JSON file");
  ggen->add_option("--levels", o.levels, "leveled: number of levels");
  ggen->add_option("--path-len", o.path_len, "leveled: child path length")->check(CLI::PositiveNumber);
  on(ggen, cmd_graph_gen);
  auto* verify = graph->add_subcommand("verify", "Check a coloring for squares on paths");
  verify->add_option("--graph,-g", o.graph_file, "Graph JSON")->required();
  verify->add_option("--coloring,-c", o.coloring_file, "Coloring JSON array")->required();
  verify->add_option("--k", o.k, "Forbid squares of period >= k")->check(CLI::PositiveNumber);
  verify->add_option("--max-path", o.max_path, "Longest path examined (default: all)");
  verify->add_option("--max-paths", o.max_paths, "Path budget, e.g. 1e7");
  on(verify, cmd_graph_verify);

  auto* search = app.add_subcommand("search", "Exact and exploratory searches");
  search->require_subcommand(1);
  auto* pik = search->add_subcommand("pik", "Exact pi_k of a small graph");
  pik->add_option("--graph,-g", o.graph_file, "Graph JSON")->required();
  pik->add_option("--k", o.k, "Forbid squares of period >= k")->check(CLI::PositiveNumber);
  add_budget(pik, o);
  on(pik, cmd_search_pik);
  auto* sword = search->add_subcommand("word", "Longest word avoiding squares of period >= k");
  sword->add_option("--alphabet", o.alphabet, "Alphabet size")->required();
  sword->add_option("--k", o.k, "Forbid squares of period >= k")->check(CLI::PositiveNumber);
  sword->add_option("--length,-n", o.length, "Target length")->required();
  add_budget(sword, o);
  on(sword, cmd_search_word);
  auto* twit = search->add_subcommand("tree-witness", "Smallest tree needing more than --colors colors");
  twit->add_option("--k", o.k, "Forbid squares of period >= k")->check(CLI::PositiveNumber);
  twit->add_option("--colors", o.colors, "Palette size")->check(CLI::PositiveNumber);
  twit->add_option("--max-depth", o.max_depth, "Deepest level allowed");
  twit->add_option("--max-arity", o.max_arity, "Most children per vertex")->check(CLI::PositiveNumber);
  twit->add_option("--max-vertices", o.max_vertices, "Largest tree tried");
  add_budget(twit, o);
  on(twit, cmd_search_tree_witness);

  auto* suite = app.add_subcommand("suite", "Acceptance criteria");
  suite->require_subcommand(1);
  auto* run = suite->add_subcommand("run", "Run the acceptance criteria");
  run->add_option("--only", o.only, "Criterion id or tag (repeatable)");
  on(run, cmd_suite_run);

  // global flags such as --json may follow the subcommand
  auto pass_through = [](auto&& self, CLI::App* a) -> void {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  pass_through(pass_through, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return kUsage;
}
