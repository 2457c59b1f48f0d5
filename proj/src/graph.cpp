#include "chromabound/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0), neighbors_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParameterError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "} with n = " + std::to_string(n));
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (adj_[e.u * n + e.v]) continue;
    adj_[e.u * n + e.v] = adj_[e.v * n + e.u] = 1;
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, nb.size());
  return best;
}

std::optional<Edge> find_conflict(const Graph& g, std::span<const int> colors) {
  if (colors.size() != g.vertex_count()) {
    throw DimensionError("coloring has " + std::to_string(colors.size()) + " entries, graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
  }
  for (const Edge& e : g.edges()) {
    if (colors[e.u] == colors[e.v]) return e;
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, std::span<const int> colors) {
  return !find_conflict(g, colors).has_value();
}

Coloring make_coloring(const Graph& g, std::span<const int> colors) {
  if (auto bad = find_conflict(g, colors)) {
    throw ColoringError(bad->u, bad->v,
                        "improper coloring: vertices " + std::to_string(bad->u) + " and " +
                            std::to_string(bad->v) + " share color " +
                            std::to_string(colors[bad->u]));
  }
  Coloring out;
  out.colors.resize(colors.size());
  std::map<int, int> relabel;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0) throw ParameterError("negative color at vertex " + std::to_string(v));
    auto [it, inserted] = relabel.emplace(colors[v], static_cast<int>(relabel.size()));
    out.colors[v] = it->second;
  }
  out.num_colors = static_cast<int>(relabel.size());
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace chromabound
