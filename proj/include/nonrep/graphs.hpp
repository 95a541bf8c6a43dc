#pragma once

// Graph families used in the planar lower-bound constructions.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nonrep/graph.hpp"
#include "nonrep/repetitions.hpp"

namespace nonrep {

Graph path_graph(std::size_t n);

/// G_0 = K4; G_{i+1} stacks a degree-3 vertex into every face of G_i.
/// Vertex ids follow insertion order, so G_i is an induced prefix of G_{i+1};
/// `levels` records the generation of each vertex.
Graph stacked_triangulation(std::size_t i);

/// Number of vertices of G_i: 2 * 3^i + 2.
std::size_t stacked_vertex_count(std::size_t i);

/// U_0 = K2; U_{i+1} glues two copies of U_i (main edges ab and cd) at b = c
/// and adds the new main edge ad.
Graph outerplanar_u(std::size_t i);

/// Matching a_1 b_1 .. a_m b_m, a copy H_x of h joined to each matched vertex
/// x, and an adjacent pair c, d joined to every matched vertex.
Graph plus4_gadget(const Graph& h, std::size_t m);

inline constexpr std::size_t kDefaultVertexBudget = 2'000'000;

/// Rooted graph where every vertex above the last level has a child path of
/// `path_len` vertices, each child adjacent to its parent.
Graph leveled_outerplanar(std::size_t levels, std::size_t path_len,
                          std::size_t vertex_budget = kDefaultVertexBudget);

/// Checks that reverse insertion order is a perfect elimination order whose
/// eliminated vertices have at most 3 later neighbours. Reports the first
/// offending vertex. Throws ConfigError without a construction log.
Verdict<Vertex> check_3tree(const Graph& g);

/// Maps a sorted face triple to the vertex stacked into it.
std::map<Face, Vertex> stacked_into(const Graph& g);

/// t vertices outside G_i forming a path, all adjacent to both ends of `edge`.
/// `host` must be stacked_triangulation(i + t) (or larger).
std::vector<Vertex> fan_witness(const Graph& host, std::size_t i, Edge edge, std::size_t t);

struct FanCheck {
  bool is_path = false;
  bool adjacent_to_edge = false;
  bool disjoint = false;
  bool ok() const { return is_path && adjacent_to_edge && disjoint; }
};
FanCheck verify_fan_witness(const Graph& host, std::size_t i, Edge edge,
                            const std::vector<Vertex>& path);

/// A copy of U_t adjacent to x and disjoint from G_i; `mapping[u]` is the host
/// vertex playing U_t's vertex u.
struct UWitness {
  std::vector<Vertex> mapping;
  bool exhausted = false;
};

/// `host` must be stacked_triangulation(i + t + 2) (or larger).
UWitness u_witness(const Graph& host, std::size_t i, Vertex x, std::size_t t);
bool verify_u_witness(const Graph& host, std::size_t i, Vertex x, std::size_t t,
                      const UWitness& w);

}  // namespace nonrep
