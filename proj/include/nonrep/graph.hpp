#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace nonrep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Face = std::array<Vertex, 3>;

/// One insertion step: `vertex` was added adjacent to every member of
/// `clique`, which was already a clique at that point.
struct LogEntry {
  Vertex vertex = 0;
  std::vector<Vertex> clique;
  bool operator==(const LogEntry&) const = default;
};

/// Simple undirected graph plus whatever construction metadata the generator
/// that built it chose to record.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count = 0);

  Vertex add_vertex();
  /// Adds a vertex adjacent to all of `clique` and logs the step. Throws if
  /// `clique` is not a clique.
  Vertex add_vertex_on_clique(std::vector<Vertex> clique);
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;
  bool is_clique(const std::vector<Vertex>& vs) const;

  std::optional<std::vector<LogEntry>> construction_log;
  std::vector<Face> faces;
  std::optional<Edge> main_edge;
  std::vector<std::size_t> levels;
  std::vector<std::string> roles;
  std::string family;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct Coloring {
  std::vector<std::uint32_t> colors;
  std::size_t color_count = 0;

  Coloring() = default;
  Coloring(std::vector<std::uint32_t> colors_, std::size_t color_count_);
  /// Color count inferred as max color + 1.
  static Coloring from_colors(std::vector<std::uint32_t> colors_);

  std::uint32_t operator[](Vertex v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
  bool operator==(const Coloring&) const = default;
};

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

}  // namespace nonrep
