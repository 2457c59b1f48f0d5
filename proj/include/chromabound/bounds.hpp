#pragma once

#include "chromabound/graph.hpp"
#include "chromabound/weights.hpp"

namespace chromabound {

/// lambda_1 / |lambda_n| + 1 for the adjacency spectrum. Throws DegenerateError on an edgeless graph.
double hoffman_bound(const Graph& g);

/// lambda_1 + 1, an upper bound on chi.
double wilf_upper_bound(const Graph& g);

/// tau_W for M = W*A: the smallest tau with Spec(-M) ≺ tau Spec(M).
/// Throws DegenerateError when M = 0.
double tau_of(const Graph& g, const WeightMatrix& w, double tol = 1e-9);

/// tau_W + 1, a lower bound on chi for every Hermitian W.
double tau_bound(const Graph& g, const WeightMatrix& w, double tol = 1e-9);

}  // namespace chromabound
