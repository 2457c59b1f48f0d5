#include "chromabound/barnes.hpp"

#include <cmath>
#include <string>

#include "chromabound/errors.hpp"
#include "chromabound/spectrum.hpp"
#include "chromabound/weights.hpp"

namespace chromabound {
namespace {

HermitianMatrix scaled_adjacency(const Graph& g, std::span<const double> d) {
  HermitianMatrix b(g.vertex_count());
  for (const Edge& e : g.edges()) b.set(e.u, e.v, 1.0 / (std::sqrt(d[e.u]) * std::sqrt(d[e.v])));
  return b;
}

double psd_margin(const Graph& g, std::span<const double> d) {
  HermitianMatrix a = adjacency_matrix(g);
  a += HermitianMatrix::real_diagonal(d);
  return min_eigenvalue(a);
}

// Best bound over positive multiples c*d: A + cD is PSD iff c >= -lambda_min(B)
// with B = D^{-1/2} A D^{-1/2}, and the bound at that c is
// lambda_max(B) / -lambda_min(B) + 1. Rescales `d` to that boundary.
double rescale_to_boundary(const Graph& g, std::vector<double>& d) {
  const Spectrum s = spectrum(scaled_adjacency(g, d));
  const double c = -s.smallest();
  if (!(c > 0.0)) return -1.0;
  for (double& x : d) x *= c;
  return s.largest() / c + 1.0;
}

}  // namespace

const char* to_string(BarnesStrategy s) {
  switch (s) {
    case BarnesStrategy::hoffman_diag: return "hoffmanDiag";
    case BarnesStrategy::coordinate_descent: return "coordinateDescent";
  }
  return "unknown";
}

double barnes_bound_for(const Graph& g, std::span<const double> d) {
  if (d.size() != g.vertex_count()) throw DimensionError("barnes: diagonal length mismatch");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) throw ParameterError("barnes: d[" + std::to_string(i) + "] must be positive");
  }
  const double margin = psd_margin(g, d);
  if (margin < kPsdSlack) {
    throw ContractError("barnes: A + D is not positive semidefinite (min eigenvalue " +
                        std::to_string(margin) + ")");
  }
  return max_eigenvalue(scaled_adjacency(g, d)) + 1.0;
}

BarnesResult barnes_bound(const Graph& g, const BarnesConfig& config) {
  if (!is_connected(g)) throw ContractError("barnes bound requires a connected graph");
  if (g.edge_count() == 0) throw DegenerateError("edgeless graph has no Barnes bound");

  const double lambda_n = spectrum(adjacency_matrix(g)).smallest();
  BarnesResult result;
  result.d.assign(g.vertex_count(), std::abs(lambda_n));
  result.bound = barnes_bound_for(g, result.d);
  if (config.strategy == BarnesStrategy::hoffman_diag) return result;

  // A bare d_i shrink leaves the PSD cone immediately from the Hoffman point
  // (A + |lambda_n| I is singular), so every trial is pulled back onto the
  // boundary by the optimal uniform rescale before it is judged.
  double shrink = config.shrink;
  for (int sweep = 0; sweep < config.sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < result.d.size(); ++i) {
      for (double factor : {1.0 - shrink, 1.0 / (1.0 - shrink)}) {
        std::vector<double> trial = result.d;
        trial[i] *= factor;
        const double bound = rescale_to_boundary(g, trial);
        if (bound <= result.bound + 1e-12) continue;
        if (psd_margin(g, trial) < kPsdSlack) continue;
        result.d = std::move(trial);
        result.bound = bound;
        ++result.accepted_steps;
        improved = true;
        break;
      }
    }
    if (!improved) {
      shrink *= 0.5;
      if (shrink < 1e-3) break;
    }
  }
  return result;
}

}  // namespace chromabound
