#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "chromabound/graph.hpp"
#include "chromabound/matrix.hpp"

namespace chromabound {

/// Real symmetric 0/1 adjacency matrix with zero diagonal.
HermitianMatrix adjacency_matrix(const Graph& g);

enum class WeightOrigin { ones, barnes, optimized, user };

const char* to_string(WeightOrigin origin);

/// Hermitian weight matrix W; only its entries on edges reach W*A.
struct WeightMatrix {
  HermitianMatrix values;
  WeightOrigin origin = WeightOrigin::user;
  std::uint64_t seed = 0;  ///< optimized: seed of the winning restart
  int iterations = 0;      ///< optimized: pattern-search iterations used
};

/// All-ones n x n matrix (diagonal included); W*A = A for every graph on n vertices.
WeightMatrix ones_weight(std::size_t n);
/// All-ones restricted to the edges of g.
WeightMatrix ones_weight(const Graph& g);

/// w_kl = 1 / (sqrt(d_k) sqrt(d_l)), so that W*A = D^{-1/2} A D^{-1/2}.
/// Throws ParameterError unless every d_i > 0.
WeightMatrix barnes_weight(std::span<const double> d);

/// Zeros W off the edge set and on the diagonal. Throws DegenerateError
/// when W vanishes on every edge of g, DimensionError on size mismatch.
WeightMatrix canonicalize(const Graph& g, const WeightMatrix& w);

/// M = W * A.
HermitianMatrix weighted_adjacency(const Graph& g, const WeightMatrix& w);

}  // namespace chromabound
