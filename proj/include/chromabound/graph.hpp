#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chromabound {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Edges are stored normalized (u < v), sorted and unique; adjacency queries
/// go through a dense bit matrix, which is fine at the n <= 500 scale we target.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Duplicate and reversed edges collapse. Throws ParameterError on a
  /// self-loop or an endpoint outside [0, n).
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(std::size_t k, std::size_t l) const { return adj_[k * n_ + l] != 0; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return neighbors_[v]; }
  std::size_t degree(std::size_t v) const { return neighbors_[v].size(); }
  std::size_t max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Proper vertex coloring. Only produced by code that has checked properness
/// (`make_coloring`, the DSATUR routines).
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;
};

/// True iff no edge is monochromatic. Throws DimensionError on a length mismatch.
bool is_proper(const Graph& g, std::span<const int> colors);

/// First monochromatic edge, if any.
std::optional<Edge> find_conflict(const Graph& g, std::span<const int> colors);

/// Validates `colors` against `g` and relabels the classes densely as 0..q-1
/// in order of first appearance. Throws ColoringError on a monochromatic edge
/// and ParameterError on negative entries.
Coloring make_coloring(const Graph& g, std::span<const int> colors);

bool is_connected(const Graph& g);

}  // namespace chromabound
