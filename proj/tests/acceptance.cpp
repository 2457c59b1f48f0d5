// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chromabound/barnes.hpp"
#include "chromabound/bounds.hpp"
#include "chromabound/cli.hpp"
#include "chromabound/exact_color.hpp"
#include "chromabound/generators.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/random.hpp"
#include "chromabound/report.hpp"
#include "chromabound/reversal.hpp"
#include "chromabound/spectrum.hpp"

using namespace chromabound;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<NamedGraph>& corpus() {
  static std::vector<NamedGraph> c = default_corpus();
  return c;
}

std::vector<ColoringResult>& corpus_chi() {
  static std::vector<ColoringResult> r = [] {
    std::vector<ColoringResult> out;
    for (const auto& named : corpus()) out.push_back(exact_chi(named.graph));
    return out;
  }();
  return r;
}

Outcome hoffman_values() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::pair<Graph, double> cases[] = {{complete_graph(3), 3.0},
                                            {complete_graph(5), 5.0},
                                            {cycle_graph(4), 2.0},
                                            {petersen_graph(), 2.5}};
  for (const auto& [g, expect] : cases) {
    const double h = hoffman_bound(g);
    if (std::abs(h - expect) > 1e-8) fail(o, "got " + num(h) + ", want " + num(expect));
    const HermitianMatrix a = adjacency_matrix(g);
    const double res = max_residual(a, eigen_decompose(a));
    if (res > 1e-9) fail(o, "eigen residual " + num(res));
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) fail(o, "took " + num(t) + " s");
  o.detail = o.pass ? "4 graphs, " + num(t) + " s" : o.detail;
  return o;
}

Outcome tau_dominates_hoffman() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& named : corpus()) {
    if (named.graph.edge_count() == 0) continue;
    const double tau = tau_bound(named.graph, ones_weight(named.graph));
    const double h = hoffman_bound(named.graph);
    if (tau < h - 1e-8) fail(o, named.id + ": " + num(tau) + " < " + num(h));
  }
  const double t = seconds_since(t0);
  if (t >= 10.0) fail(o, "took " + num(t) + " s");
  if (o.pass) o.detail = std::to_string(corpus().size()) + " graphs, " + num(t) + " s";
  return o;
}

Outcome barnes_identity() {
  Outcome o;
  Rng rng(2024);
  std::size_t checked = 0;
  for (const auto& named : corpus()) {
    const Graph& g = named.graph;
    if (!is_connected(g) || g.edge_count() == 0) continue;
    ++checked;
    const double b = barnes_bound(g, BarnesConfig{BarnesStrategy::hoffman_diag}).bound;
    const double h = hoffman_bound(g);
    if (std::abs(b - h) > 1e-8) fail(o, named.id + ": barnes " + num(b) + " vs hoffman " + num(h));

    const HermitianMatrix a = adjacency_matrix(g);
    const std::size_t n = g.vertex_count();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> d(n);
      for (double& x : d) x = rng.uniform(0.05, 10.0);
      const HermitianMatrix wa = weighted_adjacency(g, barnes_weight(d));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Complex direct = a(k, l) / std::sqrt(d[k] * d[l]);
          if (std::abs(wa(k, l) - direct) > 1e-12) fail(o, named.id + ": W*A entry mismatch");
        }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " connected graphs";
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto t0 = Clock::now();
  BoundConfig cfg;  // default optimizer budget: 8 restarts x 200 iterations
  cfg.exact_limit = 0;
  std::size_t i = 0;
  for (const auto& named : corpus()) {
    const ColoringResult& chi = corpus_chi()[i++];
    if (chi.timed_out) {
      fail(o, named.id + ": exact oracle timed out");
      continue;
    }
    const BoundReport r = chromatic_lower_bound(named.graph, named.id, cfg);
    const double chi_d = chi.chi;
    for (const auto& [name, v] : {std::pair{"hoffman", r.hoffman}, std::pair{"barnes", r.barnes},
                                  std::pair{"tau-ones", r.tau_ones},
                                  std::pair{"tau-opt", r.tau_optimized}}) {
      if (v && *v > chi_d + 1e-6)
        fail(o, named.id + ": " + name + " " + num(*v) + " > chi " + std::to_string(chi.chi));
    }
    if (!r.wilf || *r.wilf < chi_d - 1e-6) fail(o, named.id + ": wilf below chi");
  }
  const double t = seconds_since(t0);
  if (t >= 60.0) fail(o, "took " + num(t) + " s");
  if (o.pass) o.detail = "0 violations, " + num(t) + " s";
  return o;
}

struct ReversalStats {
  Outcome construction;
  Outcome consistency;
};

ReversalStats reversal_checks() {
  ReversalStats s;
  Rng rng(77);
  std::size_t cases = 0;
  double worst = 0.0;
  std::size_t i = 0;
  for (const auto& named : corpus()) {
    const Graph& g = named.graph;
    const ColoringResult& chi = corpus_chi()[i++];
    const SignReversalMap map = reversal_from_coloring(g, chi.witness);
    const double cost = reversal_cost(map);
    if (cost != static_cast<double>(chi.chi - 1))
      fail(s.construction, named.id + ": cost " + num(cost) + " != chi - 1");
    if (g.edge_count() == 0) continue;
    const std::size_t n = g.vertex_count();
    const SignReversalMap group = group_sign_reversal(n);
    for (int trial = 0; trial < 10; ++trial) {
      ++cases;
      const HermitianMatrix m = weighted_adjacency(g, {random_hermitian(n, rng), WeightOrigin::user});
      const ReversalCheck check = verify_reversal(map, m);
      worst = std::max(worst, check.residual);
      if (check.residual > 1e-9) fail(s.construction, named.id + ": residual " + num(check.residual));

      const double lb = cost_lower_bound(m);
      if (lb > chi.chi - 1 + 1e-8)
        fail(s.consistency, named.id + ": lower bound " + num(lb) + " > chi - 1");
      if (cost < lb - 1e-8) fail(s.consistency, named.id + ": coloring map below lower bound");
      if (reversal_cost(group) < lb - 1e-8)
        fail(s.consistency, named.id + ": group map below lower bound");
    }
  }
  if (s.construction.pass)
    s.construction.detail = std::to_string(cases) + " cases, worst residual " + num(worst);
  if (s.consistency.pass) s.consistency.detail = std::to_string(cases) + " cases";
  return s;
}

Outcome ky_fan() {
  Outcome o;
  Rng rng(4);
  for (int terms : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 9.0);
      HermitianMatrix total(n);
      std::vector<double> summed(n, 0.0);
      for (int j = 0; j < terms; ++j) {
        const HermitianMatrix a = random_hermitian(n, rng, trial % 2 == 0);
        total += a;
        const Spectrum s = spectrum(a);
        for (std::size_t k = 0; k < n; ++k) summed[k] += s[k];
      }
      const Spectrum lhs = spectrum(total);
      if (!majorizes(lhs.values(), summed, 1e-8).holds)
        fail(o, std::to_string(terms) + " terms, n = " + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "100 pairs, 100 triples";
  return o;
}

Outcome schur() {
  Outcome o;
  Rng rng(9);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const HermitianMatrix m = random_hermitian(n, rng);
    HermitianMatrix expect = HermitianMatrix::identity(n);
    expect *= m.trace() / static_cast<double>(n);
    const double err = (schur_average(m) - expect).frobenius_norm();
    if (err > 1e-10 * m.frobenius_norm()) fail(o, "schur average off by " + num(err));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const HermitianMatrix t = random_traceless_hermitian(n, rng);
    const ReversalCheck check = verify_reversal(group_sign_reversal(n), t);
    worst = std::max(worst, check.residual);
    if (check.residual > 1e-9) fail(o, "group map residual " + num(check.residual));
  }
  if (o.pass) o.detail = "50 + 50 matrices, worst residual " + num(worst);
  return o;
}

Outcome eigensolver() {
  Outcome o;
  Rng rng(11);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 32.0);
    const HermitianMatrix m = random_hermitian(n, rng, trial % 2 == 1);
    const EigenDecomposition eig = eigen_decompose(m);
    const double res = max_residual(m, eig) / m.frobenius_norm();
    worst = std::max(worst, res);
    if (res > 1e-9) fail(o, "n = " + std::to_string(n) + ": relative residual " + num(res));
    if (std::abs(eig.values.sum() - m.trace()) > 1e-9 * static_cast<double>(n))
      fail(o, "n = " + std::to_string(n) + ": eigenvalue sum differs from trace");
  }
  if (o.pass) o.detail = "200 matrices, worst relative residual " + num(worst);
  return o;
}

Outcome determinism() {
  Outcome o;
  auto once = [](std::string& out) {
    const char* argv[] = {"chromabound", "compare", "--gen-corpus", "--seed", "7", "--format", "json"};
    std::ostringstream os, es;
    const int code = run_cli(7, argv, os, es);
    out = os.str();
    return code;
  };
  std::string a, b;
  if (once(a) != kExitOk || once(b) != kExitOk) fail(o, "compare failed");
  if (a != b) fail(o, "outputs differ");
  if (a.empty()) fail(o, "empty output");
  if (o.pass) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  };

  report(1, "hoffman bound on closed-form spectra", guarded(hoffman_values));
  report(2, "tau with all-ones weights dominates hoffman", guarded(tau_dominates_hoffman));
  report(3, "barnes with |lambda_min| I equals hoffman; barnes weight identity",
         guarded(barnes_identity));
  report(4, "soundness against exact chromatic numbers", guarded(soundness));
  ReversalStats rs;
  try {
    rs = reversal_checks();
  } catch (const std::exception& e) {
    rs.construction = rs.consistency = Outcome{false, std::string("exception: ") + e.what()};
  }
  report(5, "coloring sign reversal maps", rs.construction);
  report(6, "reversal cost lower bound consistency", rs.consistency);
  report(7, "spectrum of a sum is majorized by the summed spectra", guarded(ky_fan));
  report(8, "schur averaging and group sign reversal", guarded(schur));
  report(9, "eigensolver residuals and traces", guarded(eigensolver));
  report(10, "compare output is deterministic", guarded(determinism));

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
