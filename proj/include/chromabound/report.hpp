#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromabound/barnes.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/optimizer.hpp"

namespace chromabound {

enum class Method { hoffman, wilf, tau_ones, tau_opt, barnes, all };

/// Parses "hoffman", "wilf", "tau-ones", "tau-opt", "barnes", "all".
std::optional<Method> parse_method(std::string_view name);

struct BoundConfig {
  Method method = Method::all;
  OptimizerConfig optimizer;
  BarnesConfig barnes{BarnesStrategy::coordinate_descent};
  std::size_t exact_limit = 30;
  std::uint64_t exact_budget = 1'000'000;
  double tol = 1e-9;
};

/// Non-zero weight of the optimized W on edge {u, v} (0-indexed).
struct EdgeWeight {
  std::size_t u = 0;
  std::size_t v = 0;
  double re = 0.0;
  double im = 0.0;
};

struct Certificates {
  std::optional<double> lambda_max;
  std::optional<double> lambda_min;
  std::optional<double> spectrum_residual;  ///< max eigenpair residual of A
  std::vector<double> barnes_d;
  std::string barnes_strategy;
  std::vector<EdgeWeight> tau_weights;
  std::optional<int> tau_restart;
  std::optional<long> tau_evaluations;
  std::vector<int> exact_coloring;
  std::optional<std::uint64_t> exact_nodes;
  std::optional<bool> exact_timed_out;
};

/// All bounds computed for one graph. The tau fields hold tau_W + 1, on the
/// same scale as the other bounds; absent fields come with a note.
struct BoundReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> hoffman;
  std::optional<double> wilf;
  std::optional<double> tau_ones;
  std::optional<double> tau_optimized;
  std::optional<double> barnes;
  std::optional<int> exact_chi;
  int lower_bound = 0;  ///< ceil(max lower bound - 1e-6), at least 1 for non-empty graphs
  std::uint64_t seed = 0;
  Certificates certificates;
  std::vector<std::string> notes;

  /// Largest of hoffman, tau_ones, tau_optimized, barnes.
  std::optional<double> best_lower() const;
};

/// ceil(x - 1e-6).
int integer_lower_bound(double x);

/// Computes the bounds requested by `config.method` cheapest first: wilf,
/// hoffman, tau-ones, barnes, tau-opt, then the exact oracle (only for
/// Method::all and n <= exact_limit). Per-bound failures become notes.
BoundReport chromatic_lower_bound(const Graph& g, const std::string& graph_id,
                                  const BoundConfig& config = {});

/// Fixed field order, floats at 12 significant digits.
std::string to_json(const BoundReport& report);
std::string to_json(const std::vector<BoundReport>& reports);

}  // namespace chromabound
