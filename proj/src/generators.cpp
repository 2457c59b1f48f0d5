#include "chromabound/generators.hpp"

#include <cstdio>

#include "chromabound/errors.hpp"
#include "chromabound/random.hpp"

namespace chromabound {
namespace {

void require_positive(std::size_t n, const char* kind) {
  if (n < 1) throw ParameterError(std::string(kind) + " needs n >= 1");
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::size_t kMaxKneserVertices = 5000;

}  // namespace

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) edges.push_back({k, l});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) edges.push_back({k, (k + 1) % n});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require_positive(n, "star");
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < n; ++k) edges.push_back({0, k});
  return Graph(n, edges);
}

Graph petersen_graph() { return kneser_graph(5, 2); }

Graph kneser_graph(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || 2 * k > n) throw ParameterError("kneser needs 1 <= k <= n/2");
  if (n > 62 || binomial(n, k) > kMaxKneserVertices) {
    throw ParameterError("kneser graph too large");
  }
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k) subsets.push_back(mask);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) edges.push_back({a, b});
  return Graph(subsets.size(), edges);
}

Graph mycielskian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : g.edges()) {
    edges.push_back({n + e.u, e.v});
    edges.push_back({n + e.v, e.u});
  }
  for (std::size_t i = 0; i < n; ++i) edges.push_back({n + i, 2 * n});
  return Graph(2 * n + 1, edges);
}

Graph mycielski_graph(std::size_t k) {
  if (k < 1) throw ParameterError("mycielski needs k >= 1");
  if (k > 9) throw ParameterError("mycielski order too large (k <= 9)");
  if (k == 1) return Graph(1);
  Graph g = complete_graph(2);
  for (std::size_t i = 2; i < k; ++i) g = mycielskian(g);
  return g;
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  require_positive(n, "erdos_renyi");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("erdos_renyi needs 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      if (rng.uniform() < p) edges.push_back({k, l});
  return Graph(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::complete: return complete_graph(spec.n);
    case GraphKind::cycle: return cycle_graph(spec.n);
    case GraphKind::star: return star_graph(spec.n);
    case GraphKind::petersen: return petersen_graph();
    case GraphKind::mycielski: return mycielski_graph(spec.k);
    case GraphKind::kneser: return kneser_graph(spec.n, spec.k);
    case GraphKind::erdos_renyi: return erdos_renyi(spec.n, spec.p, spec.seed);
  }
  throw ParameterError("unknown graph kind");
}

std::string describe(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::complete: return "complete-" + std::to_string(spec.n);
    case GraphKind::cycle: return "cycle-" + std::to_string(spec.n);
    case GraphKind::star: return "star-" + std::to_string(spec.n);
    case GraphKind::petersen: return "petersen";
    case GraphKind::mycielski: return "mycielski-" + std::to_string(spec.k);
    case GraphKind::kneser:
      return "kneser-" + std::to_string(spec.n) + "-" + std::to_string(spec.k);
    case GraphKind::erdos_renyi: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "gnp-%zu-%g-s%llu", spec.n, spec.p,
                    static_cast<unsigned long long>(spec.seed));
      return buf;
    }
  }
  return "unknown";
}

std::vector<NamedGraph> default_corpus() {
  std::vector<GeneratorSpec> specs;
  for (std::size_t n = 2; n <= 8; ++n) specs.push_back({GraphKind::complete, n});
  for (std::size_t n = 3; n <= 12; ++n) specs.push_back({GraphKind::cycle, n});
  specs.push_back({GraphKind::star, 6});
  specs.push_back({GraphKind::petersen});
  specs.push_back({GraphKind::mycielski, 0, 4});
  specs.push_back({GraphKind::mycielski, 0, 5});
  for (std::size_t i = 0; i < 10; ++i) {
    specs.push_back({GraphKind::erdos_renyi, 7 + i, 0, 0.4, 1000 + i});
  }
  std::vector<NamedGraph> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back({describe(s), generate(s)});
  return out;
}

}  // namespace chromabound
