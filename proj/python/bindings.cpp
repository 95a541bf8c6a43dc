// Low-level module; graphs, colorings and certificates cross as JSON text and
// the Python package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonrep/errors.hpp"
#include "nonrep/graphs.hpp"
#include "nonrep/paths.hpp"
#include "nonrep/repetitions.hpp"
#include "nonrep/search.hpp"
#include "nonrep/suite.hpp"
#include "nonrep/treecert.hpp"
#include "nonrep/words.hpp"

namespace py = pybind11;
using namespace nonrep;

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

Triple triple(const Repetition& r) { return {r.start, r.length, r.period}; }

Word word_of(const std::string& s, std::optional<std::size_t> alphabet) {
  return alphabet ? Word::parse(s, *alphabet) : Word::parse(s);
}

Morphism morphism_of(const std::string& name_or_table) {
  if (name_or_table == "g2" || name_or_table == "g5") return named_morphism(name_or_table);
  return Morphism::parse(name_or_table);
}

Graph graph_of(const std::string& text) { return graph_from_json(nlohmann::json::parse(text)); }

SearchBudget budget_of(std::uint64_t node_limit, double time_limit, std::size_t max_colors) {
  SearchBudget b;
  b.node_limit = node_limit;
  b.time_limit_seconds = time_limit;
  b.max_colors = max_colors;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "nonrep native core";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("morphism_images", [](const std::string& name) {
    std::vector<std::string> out;
    for (const auto& w : named_morphism(name).images()) out.push_back(w.str());
    return out;
  });
  m.def("apply_morphism", [](const std::string& morphism, const std::string& word) {
    const Morphism mor = morphism_of(morphism);
    return apply_morphism(mor, Word::parse(word, mor.source_alphabet_size())).str();
  });
  m.def("generate_powerfree_ternary", [](std::size_t n) { return generate_powerfree_ternary(n).str(); });

  m.def(
      "find_squares",
      [](const std::string& w, std::size_t min_period, std::size_t max_period, std::optional<std::size_t> alphabet) {
        std::vector<Triple> out;
        for (const auto& r : find_squares(word_of(w, alphabet), min_period, max_period)) out.push_back(triple(r));
        return out;
      },
      py::arg("word"), py::arg("min_period"), py::arg("max_period"), py::arg("alphabet") = py::none());
  m.def(
      "max_exponent",
      [](const std::string& w, std::size_t min_period, std::optional<std::size_t> alphabet) {
        const Rational r = max_exponent(word_of(w, alphabet), min_period);
        return std::pair{r.numerator(), r.denominator()};
      },
      py::arg("word"), py::arg("min_period") = 1, py::arg("alphabet") = py::none());
  m.def(
      "power_free_violation",
      [](const std::string& w, const std::string& beta, bool strict, std::size_t n,
         std::optional<std::size_t> alphabet) -> std::optional<Triple> {
        const auto v = is_power_free(word_of(w, alphabet), PowerFreeSpec(parse_rational(beta), strict, n));
        if (v.passed()) return std::nullopt;
        return triple(*v.counterexample);
      },
      py::arg("word"), py::arg("beta"), py::arg("strict"), py::arg("n"), py::arg("alphabet") = py::none());
  m.def(
      "directed_violation",
      [](const std::string& w, std::size_t d,
         std::optional<std::size_t> alphabet) -> std::optional<std::pair<std::size_t, std::string>> {
        const auto v = is_d_directed(word_of(w, alphabet), d);
        if (v.passed()) return std::nullopt;
        return std::pair{v.counterexample->position, v.counterexample->factor.str()};
      },
      py::arg("word"), py::arg("d"), py::arg("alphabet") = py::none());
  m.def("directedness_threshold",
        [](const std::string& beta, std::size_t d) { return directedness_threshold(parse_rational(beta), d); });

  m.def(
      "certify",
      [](const std::string& morphism, std::optional<std::size_t> factor_len) {
        BranchCheckSpec spec;
        if (morphism == "g2") {
          spec = g2_spec();
        } else if (morphism == "g5") {
          spec = g5_spec();
        } else {
          throw ConfigError("only g2 and g5 carry a built-in spec");
        }
        py::gil_scoped_release release;
        return to_json(certify_morphic_tree_coloring(named_morphism(morphism), spec, factor_len)).dump();
      },
      py::arg("morphism"), py::arg("factor_len") = py::none());

  m.def("path_graph", [](std::size_t n) { return to_json(path_graph(n)).dump(); });
  m.def("stacked_triangulation", [](std::size_t i) { return to_json(stacked_triangulation(i)).dump(); });
  m.def("outerplanar_u", [](std::size_t i) { return to_json(outerplanar_u(i)).dump(); });
  m.def("plus4_gadget",
        [](const std::string& h, std::size_t mm) { return to_json(plus4_gadget(graph_of(h), mm)).dump(); });

  m.def(
      "verify_coloring",
      [](const std::string& graph, std::vector<std::uint32_t> colors, std::size_t k, std::size_t max_path) {
        const Graph g = graph_of(graph);
        const auto r = verify_coloring(g, Coloring::from_colors(std::move(colors)), k, max_path);
        py::dict out;
        out["ok"] = r.ok();
        out["exhaustive"] = r.exhaustive;
        out["paths"] = r.paths;
        if (r.violation) {
          out["path"] = r.violation->path;
          out["square"] = triple(r.violation->square);
        }
        return out;
      },
      py::arg("graph"), py::arg("colors"), py::arg("k"), py::arg("max_path"));
  m.def(
      "pi_k",
      [](const std::string& graph, std::size_t k, std::uint64_t node_limit, double time_limit, std::size_t max_colors) {
        const Graph g = graph_of(graph);
        const SearchBudget b = budget_of(node_limit, time_limit, max_colors);
        PiResult r;
        {
          py::gil_scoped_release release;
          r = pi_k_exact(g, k, b);
        }
        py::dict out;
        out["lower"] = r.lower;
        out["upper"] = r.upper;
        out["witness"] = r.witness.colors;
        out["exhausted"] = r.exhausted;
        out["nodes"] = r.nodes;
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("node_limit") = SearchBudget{}.node_limit,
      py::arg("time_limit") = SearchBudget{}.time_limit_seconds, py::arg("max_colors") = SearchBudget{}.max_colors);

  m.def(
      "run_suite",
      [](const std::vector<std::string>& only) {
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(only, nullptr);
        }
        return report_json(results).dump();
      },
      py::arg("only") = std::vector<std::string>{});
}
