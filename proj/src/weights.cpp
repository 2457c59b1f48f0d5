#include "chromabound/weights.hpp"

#include <cmath>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

HermitianMatrix adjacency_matrix(const Graph& g) {
  HermitianMatrix a(g.vertex_count());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

const char* to_string(WeightOrigin origin) {
  switch (origin) {
    case WeightOrigin::ones: return "ones";
    case WeightOrigin::barnes: return "barnes";
    case WeightOrigin::optimized: return "optimized";
    case WeightOrigin::user: return "user";
  }
  return "unknown";
}

WeightMatrix ones_weight(std::size_t n) {
  if (n < 1) throw ParameterError("ones_weight needs n >= 1");
  HermitianMatrix w(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) w.set(k, l, 1.0);
  return {std::move(w), WeightOrigin::ones};
}

WeightMatrix ones_weight(const Graph& g) {
  return {adjacency_matrix(g), WeightOrigin::ones};
}

WeightMatrix barnes_weight(std::span<const double> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0) || !std::isfinite(d[i])) {
      throw ParameterError("barnes_weight: d[" + std::to_string(i) + "] must be positive");
    }
  }
  const std::size_t n = d.size();
  HermitianMatrix w(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) w.set(k, l, 1.0 / (std::sqrt(d[k]) * std::sqrt(d[l])));
  return {std::move(w), WeightOrigin::barnes};
}

WeightMatrix canonicalize(const Graph& g, const WeightMatrix& w) {
  if (w.values.dim() != g.vertex_count()) {
    throw DimensionError("weight matrix has dimension " + std::to_string(w.values.dim()) +
                         ", graph has " + std::to_string(g.vertex_count()) + " vertices");
  }
  WeightMatrix out{HermitianMatrix(g.vertex_count()), w.origin, w.seed, w.iterations};
  bool nonzero = false;
  for (const Edge& e : g.edges()) {
    const Complex v = w.values(e.u, e.v);
    out.values.set(e.u, e.v, v);
    nonzero = nonzero || v != Complex{};
  }
  if (!nonzero) throw DegenerateError("weight matrix vanishes on every edge");
  return out;
}

HermitianMatrix weighted_adjacency(const Graph& g, const WeightMatrix& w) {
  return hadamard_product(w.values, adjacency_matrix(g));
}

}  // namespace chromabound
