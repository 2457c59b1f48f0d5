#pragma once

#include <cstdint>

#include "chromabound/graph.hpp"
#include "chromabound/weights.hpp"

namespace chromabound {

/// Random-restart coordinate pattern search over W.
///
/// W carries one real weight per edge, plus one phase per edge when
/// `allow_complex` is set (w_kl = r e^{i theta}). Restart 0 starts from the
/// all-ones weight; restart j > 0 draws weights from U[0.5, 1.5] (and phases
/// from U[-pi, pi)) with seed + j. One iteration is a full poll over all
/// coordinates; the step halves after a poll without improvement.
struct OptimizerConfig {
  int restarts = 8;
  int iterations = 200;
  std::uint64_t seed = 0;
  bool allow_complex = false;
  double initial_step = 0.25;
  double min_step = 1e-4;
  double tol = 1e-9;
  /// Worker threads for restarts; 0 uses the hardware concurrency.
  unsigned threads = 1;
};

struct OptimizedWeight {
  WeightMatrix weight;  ///< canonical, unit Frobenius norm
  double tau = 0.0;
  int restart = 0;
  long evaluations = 0;
};

/// Best tau_W found. Never below the all-ones value (restart 0 only accepts
/// improvements). Ties between restarts go to the lexicographically smallest
/// parameter vector, so the result does not depend on thread scheduling.
/// Throws DegenerateError on an edgeless graph.
OptimizedWeight optimize_weight(const Graph& g, const OptimizerConfig& config = {});

}  // namespace chromabound
