#include "nonrep/graphs.hpp"

#include <algorithm>

#include "nonrep/errors.hpp"

namespace nonrep {

Graph path_graph(std::size_t n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  Graph g(n);
  g.family = "path";
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

std::size_t stacked_vertex_count(std::size_t i) {
  std::size_t p = 1;
  for (std::size_t k = 0; k < i; ++k) p *= 3;
  return 2 * p + 2;
}

Graph stacked_triangulation(std::size_t i) {
  Graph g;
  g.family = "stacked";
  g.add_vertex_on_clique({});
  g.add_vertex_on_clique({0});
  g.add_vertex_on_clique({0, 1});
  g.add_vertex_on_clique({0, 1, 2});
  g.levels.assign(4, 0);
  g.faces = {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}, Face{1, 2, 3}};
  for (std::size_t gen = 1; gen <= i; ++gen) {
    std::vector<Face> next;
    next.reserve(g.faces.size() * 3);
    for (const auto& [a, b, c] : g.faces) {
      const Vertex v = g.add_vertex_on_clique({a, b, c});
      g.levels.push_back(gen);
      next.push_back({a, b, v});
      next.push_back({a, c, v});
      next.push_back({b, c, v});
    }
    g.faces = std::move(next);
  }
  return g;
}

Graph outerplanar_u(std::size_t i) {
  Graph g(2);
  g.add_edge(0, 1);
  for (std::size_t step = 0; step < i; ++step) {
    // second copy: its vertex 0 is identified with our vertex n-1, the rest shift by n-1
    const auto n = static_cast<Vertex>(g.vertex_count());
    const auto copy = g.edges();
    for (Vertex k = 1; k < n; ++k) g.add_vertex();
    for (const auto& [u, v] : copy) g.add_edge(u + n - 1, v + n - 1);
    g.add_edge(0, 2 * n - 2);
  }
  g.family = "outerplanar_u";
  g.main_edge = Edge{0, static_cast<Vertex>(g.vertex_count() - 1)};
  return g;
}

Graph plus4_gadget(const Graph& h, std::size_t m) {
  if (m < 1) throw DomainError("gadget needs a matching of at least one edge");
  Graph g(2 * m);
  g.family = "plus4";
  for (std::size_t e = 0; e < m; ++e) {
    g.add_edge(static_cast<Vertex>(2 * e), static_cast<Vertex>(2 * e + 1));
    g.roles.push_back("a");
    g.roles.push_back("b");
  }
  const auto hedges = h.edges();
  for (Vertex x = 0; x < 2 * m; ++x) {
    const auto base = static_cast<Vertex>(g.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      const Vertex u = g.add_vertex();
      g.add_edge(x, u);
      g.roles.push_back("h");
    }
    for (const auto& [u, v] : hedges) g.add_edge(base + u, base + v);
  }
  const Vertex c = g.add_vertex();
  const Vertex d = g.add_vertex();
  g.roles.push_back("c");
  g.roles.push_back("d");
  g.add_edge(c, d);
  for (Vertex x = 0; x < 2 * m; ++x) {
    g.add_edge(c, x);
    g.add_edge(d, x);
  }
  return g;
}

Graph leveled_outerplanar(std::size_t levels, std::size_t path_len, std::size_t vertex_budget) {
  if (path_len < 1) throw DomainError("child paths need at least one vertex");
  std::size_t total = 0;
  std::size_t width = 1;
  for (std::size_t l = 0; l <= levels; ++l) {
    total += width;
    if (total > vertex_budget) {
      throw ConfigError("leveled graph exceeds the vertex budget of " + std::to_string(vertex_budget));
    }
    width *= path_len;
  }
  Graph g(1);
  g.family = "leveled";
  g.levels.push_back(0);
  std::vector<Vertex> frontier{0};
  for (std::size_t l = 1; l <= levels; ++l) {
    std::vector<Vertex> next;
    for (Vertex parent : frontier) {
      for (std::size_t c = 0; c < path_len; ++c) {
        const Vertex v = g.add_vertex();
        g.levels.push_back(l);
        g.add_edge(parent, v);
        if (c > 0) g.add_edge(v - 1, v);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

Verdict<Vertex> check_3tree(const Graph& g) {
  if (!g.construction_log) throw ConfigError("check_3tree needs a construction log");
  const auto& log = *g.construction_log;
  if (log.size() != g.vertex_count()) throw ConfigError("construction log does not cover every vertex");
  std::vector<std::size_t> pos(g.vertex_count(), g.vertex_count());
  for (std::size_t k = 0; k < log.size(); ++k) pos.at(log[k].vertex) = k;
  for (const auto& entry : log) {
    std::vector<Vertex> earlier;
    for (Vertex u : g.neighbors(entry.vertex)) {
      if (pos[u] < pos[entry.vertex]) earlier.push_back(u);
    }
    if (earlier.size() > 3 || !g.is_clique(earlier)) return {entry.vertex};
  }
  return {};
}

std::map<Face, Vertex> stacked_into(const Graph& g) {
  std::map<Face, Vertex> out;
  if (!g.construction_log) return out;
  for (const auto& e : *g.construction_log) {
    if (e.clique.size() == 3) out[{e.clique[0], e.clique[1], e.clique[2]}] = e.vertex;
  }
  return out;
}

namespace {

Face sorted_face(Vertex a, Vertex b, Vertex c) {
  Face f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

// First vertex of generation i+1 stacked into a face of G_i containing all of `must`.
std::optional<LogEntry> first_stack_on(const Graph& host, std::size_t i,
                                       std::initializer_list<Vertex> must) {
  if (!host.construction_log) throw ConfigError("host graph has no construction log");
  const std::size_t lo = stacked_vertex_count(i);
  const std::size_t hi = stacked_vertex_count(i + 1);
  for (const auto& e : *host.construction_log) {
    if (e.vertex < lo || e.vertex >= hi) continue;
    const bool all = std::all_of(must.begin(), must.end(), [&](Vertex v) {
      return std::find(e.clique.begin(), e.clique.end(), v) != e.clique.end();
    });
    if (all) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Vertex> fan_witness(const Graph& host, std::size_t i, Edge edge, std::size_t t) {
  const auto [x, y] = edge;
  const std::size_t base = stacked_vertex_count(i);
  if (x >= base || y >= base || !host.has_edge(x, y)) {
    throw DomainError("fan_witness needs an edge of G_" + std::to_string(i));
  }
  if (t < 1) throw DomainError("fan_witness needs t >= 1");
  const auto first = first_stack_on(host, i, {x, y});
  if (!first) throw DomainError("host graph is smaller than G_" + std::to_string(i + 1));
  const auto into = stacked_into(host);
  std::vector<Vertex> path{first->vertex};
  while (path.size() < t) {
    const auto it = into.find(sorted_face(x, y, path.back()));
    if (it == into.end()) {
      throw DomainError("host graph is smaller than G_" + std::to_string(i + t));
    }
    path.push_back(it->second);
  }
  return path;
}

FanCheck verify_fan_witness(const Graph& host, std::size_t i, Edge edge,
                            const std::vector<Vertex>& path) {
  FanCheck out;
  const std::size_t base = stacked_vertex_count(i);
  out.is_path = !path.empty();
  for (std::size_t k = 0; k < path.size(); ++k) {
    for (std::size_t l = k + 1; l < path.size(); ++l) {
      if (path[k] == path[l]) out.is_path = false;
    }
    if (k + 1 < path.size() && !host.has_edge(path[k], path[k + 1])) out.is_path = false;
  }
  out.adjacent_to_edge = std::all_of(path.begin(), path.end(), [&](Vertex v) {
    return host.has_edge(v, edge.first) && host.has_edge(v, edge.second);
  });
  out.disjoint = std::all_of(path.begin(), path.end(), [&](Vertex v) { return v >= base; });
  return out;
}

UWitness u_witness(const Graph& host, std::size_t i, Vertex x, std::size_t t) {
  if (x >= stacked_vertex_count(i)) throw DomainError("x must be a vertex of G_i");
  UWitness out;
  out.mapping.assign((std::size_t{1} << t) + 1, 0);
  const auto first = first_stack_on(host, i, {x});
  if (!first) {
    out.exhausted = true;
    return out;
  }
  const auto into = stacked_into(host);
  // first->clique is {x, a, b}; the next stack into {x, a, z1} gives an edge z1 z2 off G_i
  Vertex a = 0;
  for (Vertex v : first->clique) {
    if (v != x) {
      a = v;
      break;
    }
  }
  const Vertex z1 = first->vertex;
  const auto second = into.find(sorted_face(x, a, z1));
  if (second == into.end()) {
    out.exhausted = true;
    return out;
  }
  const Vertex z2 = second->second;

  // U_s occupies local ids [shift, shift + 2^s]; its two halves share the middle id.
  auto place = [&](auto&& self, std::size_t s, std::size_t shift, Vertex u, Vertex v) -> bool {
    out.mapping[shift] = u;
    out.mapping[shift + (std::size_t{1} << s)] = v;
    if (s == 0) return true;
    const auto it = into.find(sorted_face(x, u, v));
    if (it == into.end()) return false;
    const std::size_t half = std::size_t{1} << (s - 1);
    return self(self, s - 1, shift, u, it->second) &&
           self(self, s - 1, shift + half, it->second, v);
  };
  out.exhausted = !place(place, t, 0, z1, z2);
  return out;
}

bool verify_u_witness(const Graph& host, std::size_t i, Vertex x, std::size_t t,
                      const UWitness& w) {
  if (w.exhausted) return false;
  const std::size_t base = stacked_vertex_count(i);
  if (w.mapping.size() != (std::size_t{1} << t) + 1) return false;
  auto sorted = w.mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : w.mapping) {
    if (v < base || v >= host.vertex_count() || !host.has_edge(x, v)) return false;
  }
  const auto u = outerplanar_u(t);
  for (const auto& [p, q] : u.edges()) {
    if (!host.has_edge(w.mapping[p], w.mapping[q])) return false;
  }
  return true;
}

}  // namespace nonrep
