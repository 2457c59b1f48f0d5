#include "chromabound/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include "chromabound/errors.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/random.hpp"
#include "chromabound/spectrum.hpp"

namespace chromabound {
namespace {

constexpr double kNoValue = -std::numeric_limits<double>::infinity();

class Objective {
 public:
  Objective(const Graph& g, bool complex_weights, double tol)
      : g_(g), complex_(complex_weights), tol_(tol) {}

  std::size_t dimension() const { return g_.edge_count() * (complex_ ? 2 : 1); }

  HermitianMatrix build(const std::vector<double>& x) const {
    const auto& edges = g_.edges();
    const std::size_t m = edges.size();
    HermitianMatrix w(g_.vertex_count());
    for (std::size_t j = 0; j < m; ++j) {
      const Complex v = complex_ ? Complex(x[j] * std::cos(x[m + j]), x[j] * std::sin(x[m + j]))
                                 : Complex(x[j], 0.0);
      w.set(edges[j].u, edges[j].v, v);
    }
    return w;
  }

  double operator()(const std::vector<double>& x) {
    ++evaluations_;
    const HermitianMatrix w = build(x);
    if (w.frobenius_norm() == 0.0) return kNoValue;
    try {
      return minimal_tau(spectrum(w), tol_);
    } catch (const DegenerateError&) {
      return kNoValue;
    }
  }

  // Scales the weights (not the phases) to unit Frobenius norm of W.
  void normalize(std::vector<double>& x) const {
    const std::size_t m = g_.edge_count();
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += 2.0 * x[j] * x[j];
    if (s == 0.0) return;
    const double inv = 1.0 / std::sqrt(s);
    for (std::size_t j = 0; j < m; ++j) x[j] *= inv;
  }

  long evaluations() const { return evaluations_; }

 private:
  const Graph& g_;
  bool complex_;
  double tol_;
  long evaluations_ = 0;
};

struct RestartResult {
  std::vector<double> x;
  double tau = kNoValue;
  int iterations = 0;
  long evaluations = 0;
};

std::vector<double> starting_point(const Graph& g, const OptimizerConfig& config, int restart) {
  const std::size_t m = g.edge_count();
  std::vector<double> x(config.allow_complex ? 2 * m : m, 0.0);
  if (restart == 0) {
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m), 1.0);
    return x;
  }
  Rng rng(config.seed + static_cast<std::uint64_t>(restart));
  for (std::size_t j = 0; j < m; ++j) x[j] = rng.uniform(0.5, 1.5);
  if (config.allow_complex) {
    for (std::size_t j = 0; j < m; ++j) x[m + j] = rng.uniform(-std::numbers::pi, std::numbers::pi);
  }
  return x;
}

RestartResult pattern_search(const Graph& g, const OptimizerConfig& config, int restart) {
  Objective f(g, config.allow_complex, config.tol);
  RestartResult r;
  r.x = starting_point(g, config, restart);
  f.normalize(r.x);
  r.tau = f(r.x);

  double step = config.initial_step;
  std::vector<double> trial;
  while (r.iterations < config.iterations && step >= config.min_step) {
    ++r.iterations;
    bool improved = false;
    for (std::size_t j = 0; j < r.x.size(); ++j) {
      for (double dir : {1.0, -1.0}) {
        trial = r.x;
        trial[j] += dir * step;
        f.normalize(trial);
        const double value = f(trial);
        if (value > r.tau + 1e-12) {
          r.x = trial;
          r.tau = value;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  r.evaluations = f.evaluations();
  return r;
}

bool better(const RestartResult& a, const RestartResult& b) {
  if (a.tau != b.tau) return a.tau > b.tau;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

}  // namespace

OptimizedWeight optimize_weight(const Graph& g, const OptimizerConfig& config) {
  if (g.edge_count() == 0) throw DegenerateError("optimize_weight: graph has no edges");
  if (config.restarts < 1) throw ParameterError("optimize_weight: restarts must be >= 1");
  if (config.iterations < 0) throw ParameterError("optimize_weight: iterations must be >= 0");

  std::vector<RestartResult> results(static_cast<std::size_t>(config.restarts));
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (int j = 0; j < config.restarts; ++j) results[j] = pattern_search(g, config, j);
  } else {
    for (int first = 0; first < config.restarts; first += static_cast<int>(threads)) {
      const int last = std::min(config.restarts, first + static_cast<int>(threads));
      std::vector<std::future<RestartResult>> batch;
      for (int j = first; j < last; ++j) {
        batch.push_back(std::async(std::launch::async, pattern_search, std::cref(g),
                                   std::cref(config), j));
      }
      for (int j = first; j < last; ++j) results[j] = batch[j - first].get();
    }
  }

  std::size_t best = 0;
  long evaluations = 0;
  for (std::size_t j = 0; j < results.size(); ++j) {
    evaluations += results[j].evaluations;
    if (better(results[j], results[best])) best = j;
  }

  Objective f(g, config.allow_complex, config.tol);
  OptimizedWeight out;
  out.weight = {f.build(results[best].x), WeightOrigin::optimized,
                config.seed + best, results[best].iterations};
  out.tau = results[best].tau;
  out.restart = static_cast<int>(best);
  out.evaluations = evaluations;
  return out;
}

}  // namespace chromabound
