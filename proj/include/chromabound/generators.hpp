#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

Graph complete_graph(std::size_t n);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n);
/// Vertex 0 is the center.
Graph star_graph(std::size_t n);
Graph petersen_graph();
/// k-subsets of {0..n-1}, adjacent when disjoint. Requires 1 <= k <= n/2.
Graph kneser_graph(std::size_t n, std::size_t k);

/// One Mycielski step: for G on n vertices, the result has 2n+1 vertices and
/// chromatic number chi(G)+1.
Graph mycielskian(const Graph& g);
/// Mycielski tower with chromatic number k: M1 = K1, M2 = K2, M3 = C5,
/// M4 = Groetzsch (11 vertices), M5 has 23 vertices.
Graph mycielski_graph(std::size_t k);

/// G(n, p), pairs drawn in lexicographic order from a generator seeded with `seed`.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

enum class GraphKind { complete, cycle, star, petersen, mycielski, kneser, erdos_renyi };

struct GeneratorSpec {
  GraphKind kind = GraphKind::complete;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Dispatches on `spec.kind`; throws ParameterError on invalid parameters.
Graph generate(const GeneratorSpec& spec);

/// Short identifier such as "cycle-5" or "gnp-12-0.4-s1003".
std::string describe(const GeneratorSpec& spec);

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// The fixed test corpus: K2..K8, C3..C12, star 6, Petersen, Mycielski 4 and 5,
/// and ten G(n, 0.4) graphs with n = 7..16 and fixed seeds.
std::vector<NamedGraph> default_corpus();

}  // namespace chromabound
