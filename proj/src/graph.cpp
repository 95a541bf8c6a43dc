#include "nonrep/graph.hpp"

#include <algorithm>

#include "nonrep/errors.hpp"

namespace nonrep {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

Vertex Graph::add_vertex_on_clique(std::vector<Vertex> clique) {
  std::sort(clique.begin(), clique.end());
  if (!is_clique(clique)) throw DomainError("logged neighborhood is not a clique");
  const Vertex v = add_vertex();
  for (Vertex u : clique) add_edge(u, v);
  if (!construction_log) construction_log.emplace();
  construction_log->push_back({v, std::move(clique)});
  return v;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw DomainError("self-loops are not allowed");
  if (u >= vertex_count() || v >= vertex_count()) throw DomainError("edge endpoint out of range");
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert(adjacency_[u], v)) {
    insert(adjacency_[v], u);
    ++edge_count_;
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(const std::vector<Vertex>& vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

Coloring::Coloring(std::vector<std::uint32_t> colors_, std::size_t color_count_)
    : colors(std::move(colors_)), color_count(color_count_) {
  for (auto c : colors) {
    if (c >= color_count) throw DomainError("color id exceeds color count");
  }
}

Coloring Coloring::from_colors(std::vector<std::uint32_t> colors_) {
  std::size_t count = 0;
  for (auto c : colors_) count = std::max<std::size_t>(count, c + 1);
  return Coloring(std::move(colors_), count);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.family.empty()) j["family"] = g.family;
  if (!g.faces.empty()) j["faces"] = g.faces;
  if (g.main_edge) j["main_edge"] = {g.main_edge->first, g.main_edge->second};
  if (!g.levels.empty()) j["levels"] = g.levels;
  if (!g.roles.empty()) j["roles"] = g.roles;
  if (g.construction_log) {
    auto log = nlohmann::json::array();
    for (const auto& e : *g.construction_log) {
      log.push_back({{"vertex", e.vertex}, {"clique", e.clique}});
    }
    j["log"] = std::move(log);
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    Graph g(j.at("vertices").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edge must be a pair");
      g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    if (j.contains("family")) g.family = j["family"].get<std::string>();
    if (j.contains("faces")) g.faces = j["faces"].get<std::vector<Face>>();
    if (j.contains("main_edge")) {
      const auto& m = j["main_edge"];
      g.main_edge = Edge{m.at(0).get<Vertex>(), m.at(1).get<Vertex>()};
    }
    if (j.contains("levels")) g.levels = j["levels"].get<std::vector<std::size_t>>();
    if (j.contains("roles")) g.roles = j["roles"].get<std::vector<std::string>>();
    if (j.contains("log")) {
      std::vector<LogEntry> log;
      for (const auto& e : j["log"]) {
        log.push_back({e.at("vertex").get<Vertex>(), e.at("clique").get<std::vector<Vertex>>()});
      }
      g.construction_log = std::move(log);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed graph JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Coloring& c) { return c.colors; }

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    return Coloring::from_colors(j.get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed coloring JSON: ") + e.what());
  }
}

}  // namespace nonrep
