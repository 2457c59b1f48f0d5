#pragma once

#include <span>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

enum class BarnesStrategy {
  /// D = |lambda_n| I, which reproduces the Hoffman bound.
  hoffman_diag,
  /// Starts from hoffman_diag and perturbs single d_i, keeping moves that
  /// raise the bound while A + D stays positive semidefinite.
  coordinate_descent,
};

const char* to_string(BarnesStrategy s);

struct BarnesConfig {
  BarnesStrategy strategy = BarnesStrategy::hoffman_diag;
  int sweeps = 50;
  double shrink = 0.1;  ///< d_i <- d_i (1 - shrink) per trial
};

struct BarnesResult {
  double bound = 0.0;
  std::vector<double> d;
  int accepted_steps = 0;
};

/// Minimum eigenvalue of A + D must be at least this.
inline constexpr double kPsdSlack = -1e-8;

/// lambda_max(D^{-1/2} A D^{-1/2}) + 1 for the given diagonal.
/// Throws ParameterError if some d_i <= 0 and ContractError if A + D is not PSD.
double barnes_bound_for(const Graph& g, std::span<const double> d);

/// Throws ContractError on a disconnected graph, DegenerateError on an edgeless one.
BarnesResult barnes_bound(const Graph& g, const BarnesConfig& config = {});

}  // namespace chromabound
