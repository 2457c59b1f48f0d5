#include "chromabound/bounds.hpp"

#include <cmath>

#include "chromabound/errors.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/spectrum.hpp"

namespace chromabound {

double hoffman_bound(const Graph& g) {
  if (g.edge_count() == 0) throw DegenerateError("edgeless graph has no Hoffman bound");
  const Spectrum s = spectrum(adjacency_matrix(g));
  return s.largest() / std::abs(s.smallest()) + 1.0;
}

double wilf_upper_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0.0;
  return spectrum(adjacency_matrix(g)).largest() + 1.0;
}

double tau_of(const Graph& g, const WeightMatrix& w, double tol) {
  const HermitianMatrix m = weighted_adjacency(g, w);
  if (m.frobenius_norm() == 0.0) throw DegenerateError("W*A vanishes: W is zero on every edge");
  return minimal_tau(spectrum(m), tol);
}

double tau_bound(const Graph& g, const WeightMatrix& w, double tol) {
  return tau_of(g, w, tol) + 1.0;
}

}  // namespace chromabound
