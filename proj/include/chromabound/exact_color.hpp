#pragma once

#include <cstdint>

#include "chromabound/graph.hpp"

namespace chromabound {

/// Greedy DSATUR: repeatedly colors the uncolored vertex with the most
/// distinct neighbor colors (ties: higher degree, then lower index) with the
/// smallest free color. Deterministic.
Coloring greedy_dsatur(const Graph& g);

/// Size of a clique found greedily from every start vertex.
int greedy_clique_size(const Graph& g);

struct ColoringResult {
  int chi = 0;            ///< exact when !timed_out, else best known upper bound
  Coloring witness;       ///< proper, uses exactly `chi` colors
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
  int lower_bound = 0;    ///< clique bound; equals chi when !timed_out
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// DSATUR branch and bound, seeded with greedy_dsatur as upper bound and a
/// greedy clique (pre-colored 0..q-1) as lower bound.
ColoringResult exact_chi(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

}  // namespace chromabound
