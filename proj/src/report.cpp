#include "chromabound/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "chromabound/bounds.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/exact_color.hpp"
#include "chromabound/spectrum.hpp"
#include "chromabound/weights.hpp"
#include "json_util.hpp"

namespace chromabound {
namespace {

using ojson = nlohmann::ordered_json;

bool wants(Method selected, Method m) { return selected == Method::all || selected == m; }

template <typename T>
ojson opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return detail::round12(*v);
  } else {
    return *v;
  }
}

ojson doubles(const std::vector<double>& xs) {
  auto out = ojson::array();
  for (double x : xs) out.push_back(detail::round12(x));
  return out;
}

ojson to_ojson(const BoundReport& r) {
  ojson j;
  j["graphId"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["hoffman"] = opt(r.hoffman);
  j["wilf"] = opt(r.wilf);
  j["tauOnes"] = opt(r.tau_ones);
  j["tauOptimized"] = opt(r.tau_optimized);
  j["barnes"] = opt(r.barnes);
  j["exactChi"] = opt(r.exact_chi);
  j["lowerBound"] = r.lower_bound;
  j["seed"] = r.seed;

  const Certificates& c = r.certificates;
  ojson cert;
  cert["lambdaMax"] = opt(c.lambda_max);
  cert["lambdaMin"] = opt(c.lambda_min);
  cert["spectrumResidual"] = opt(c.spectrum_residual);
  cert["barnesStrategy"] = c.barnes_strategy.empty() ? ojson(nullptr) : ojson(c.barnes_strategy);
  cert["barnesD"] = doubles(c.barnes_d);
  auto weights = ojson::array();
  for (const EdgeWeight& w : c.tau_weights) {
    weights.push_back({w.u, w.v, detail::round12(w.re), detail::round12(w.im)});
  }
  cert["tauWeights"] = std::move(weights);
  cert["tauRestart"] = opt(c.tau_restart);
  cert["tauEvaluations"] = opt(c.tau_evaluations);
  cert["exactColoring"] = c.exact_coloring;
  cert["exactNodes"] = opt(c.exact_nodes);
  cert["exactTimedOut"] = opt(c.exact_timed_out);
  j["certificates"] = std::move(cert);
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  if (name == "hoffman") return Method::hoffman;
  if (name == "wilf") return Method::wilf;
  if (name == "tau-ones") return Method::tau_ones;
  if (name == "tau-opt") return Method::tau_opt;
  if (name == "barnes") return Method::barnes;
  if (name == "all") return Method::all;
  return std::nullopt;
}

std::optional<double> BoundReport::best_lower() const {
  std::optional<double> best;
  for (const auto& v : {hoffman, tau_ones, tau_optimized, barnes}) {
    if (v && (!best || *v > *best)) best = v;
  }
  return best;
}

int integer_lower_bound(double x) { return static_cast<int>(std::ceil(x - 1e-6)); }

BoundReport chromatic_lower_bound(const Graph& g, const std::string& graph_id,
                                  const BoundConfig& config) {
  BoundReport r;
  r.graph_id = graph_id;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.seed = config.optimizer.seed;
  const Method method = config.method;
  const bool edgeless = g.edge_count() == 0;
  if (edgeless) r.notes.push_back("edgeless: spectral lower bounds are undefined");

  if (r.n > 0 && (wants(method, Method::wilf) || wants(method, Method::hoffman))) {
    const HermitianMatrix a = adjacency_matrix(g);
    const EigenDecomposition eig = eigen_decompose(a);
    r.certificates.lambda_max = eig.values.largest();
    r.certificates.lambda_min = eig.values.smallest();
    r.certificates.spectrum_residual = max_residual(a, eig);
  }

  if (r.n > 0 && wants(method, Method::wilf)) r.wilf = wilf_upper_bound(g);

  if (!edgeless && wants(method, Method::hoffman)) r.hoffman = hoffman_bound(g);

  if (!edgeless && wants(method, Method::tau_ones)) {
    r.tau_ones = tau_bound(g, ones_weight(g), config.tol);
  }

  if (!edgeless && wants(method, Method::barnes)) {
    if (!is_connected(g)) {
      r.notes.push_back("barnes: graph is disconnected");
    } else {
      try {
        const BarnesResult b = barnes_bound(g, config.barnes);
        r.barnes = b.bound;
        r.certificates.barnes_d = b.d;
        r.certificates.barnes_strategy = to_string(config.barnes.strategy);
      } catch (const Error& e) {
        r.notes.push_back(std::string("barnes: ") + e.what());
      }
    }
  }

  if (!edgeless && wants(method, Method::tau_opt)) {
    try {
      const OptimizedWeight best = optimize_weight(g, config.optimizer);
      r.tau_optimized = best.tau + 1.0;
      for (const Edge& e : g.edges()) {
        const Complex w = best.weight.values(e.u, e.v);
        r.certificates.tau_weights.push_back({e.u, e.v, w.real(), w.imag()});
      }
      r.certificates.tau_restart = best.restart;
      r.certificates.tau_evaluations = best.evaluations;
    } catch (const Error& e) {
      r.notes.push_back(std::string("tau-opt: ") + e.what());
    }
  }

  if (method == Method::all && r.n > 0) {
    if (r.n <= config.exact_limit) {
      const ColoringResult res = exact_chi(g, config.exact_budget);
      r.certificates.exact_nodes = res.nodes_explored;
      r.certificates.exact_timed_out = res.timed_out;
      if (res.timed_out) {
        r.notes.push_back("exact: node budget exhausted; chi in [" +
                          std::to_string(res.lower_bound) + ", " + std::to_string(res.chi) + "]");
      } else {
        r.exact_chi = res.chi;
        r.certificates.exact_coloring = res.witness.colors;
      }
    } else {
      r.notes.push_back("exact: skipped, n exceeds exact limit " +
                        std::to_string(config.exact_limit));
    }
  }

  const auto best = r.best_lower();
  r.lower_bound = r.n == 0 ? 0 : std::max(1, best ? integer_lower_bound(*best) : 1);
  return r;
}

std::string to_json(const BoundReport& report) { return to_ojson(report).dump(2) + "\n"; }

std::string to_json(const std::vector<BoundReport>& reports) {
  auto arr = ojson::array();
  for (const auto& r : reports) arr.push_back(to_ojson(r));
  return arr.dump(2) + "\n";
}

}  // namespace chromabound
