#include "chromabound/reversal.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "chromabound/errors.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/spectrum.hpp"
#include "json_util.hpp"

namespace chromabound {
namespace {

Complex root_of_unity(long k, std::size_t q) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % static_cast<long>(q)) /
                       static_cast<double>(q);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

SignReversalMap::SignReversalMap(std::size_t n, std::vector<ReversalTerm> terms)
    : n_(n), terms_(std::move(terms)) {
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const auto& t = terms_[j];
    if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
      throw ContractError("reversal term " + std::to_string(j) + ": weight must be positive");
    }
    if (t.unitary.dim() != n_) {
      throw DimensionError("reversal term " + std::to_string(j) + ": unitary has dimension " +
                           std::to_string(t.unitary.dim()) + ", expected " + std::to_string(n_));
    }
    if (!is_unitary(t.unitary)) {
      throw ContractError("reversal term " + std::to_string(j) + ": matrix is not unitary");
    }
  }
}

double reversal_cost(const SignReversalMap& map) {
  double cost = 0.0;
  for (const auto& t : map.terms()) cost += t.weight;
  return cost;
}

HermitianMatrix apply_reversal(const SignReversalMap& map, const HermitianMatrix& target) {
  if (target.dim() != map.dim()) {
    throw DimensionError("apply_reversal: map has dimension " + std::to_string(map.dim()) +
                         ", target " + std::to_string(target.dim()));
  }
  Matrix acc(map.dim());
  for (const auto& t : map.terms()) {
    acc += Complex(t.weight) * (t.unitary.adjoint() * target.matrix() * t.unitary);
  }
  return HermitianMatrix::from(acc, 1e-8);
}

ReversalCheck verify_reversal(const SignReversalMap& map, const HermitianMatrix& target,
                              double tol) {
  HermitianMatrix sum = apply_reversal(map, target);
  sum += target;
  ReversalCheck check;
  check.residual = sum.frobenius_norm();
  check.ok = check.residual <= tol * std::max(1.0, target.frobenius_norm());
  return check;
}

SignReversalMap reversal_from_coloring(const Graph& g, const Coloring& coloring) {
  if (auto bad = find_conflict(g, coloring.colors)) {
    throw ColoringError(bad->u, bad->v,
                        "improper coloring: edge {" + std::to_string(bad->u) + "," +
                            std::to_string(bad->v) + "} is monochromatic");
  }
  const std::size_t n = g.vertex_count();
  const auto q = static_cast<std::size_t>(coloring.num_colors);
  for (int c : coloring.colors) {
    if (c < 0 || static_cast<std::size_t>(c) >= q) {
      throw ParameterError("color index outside [0, num_colors)");
    }
  }
  std::vector<ReversalTerm> terms;
  for (std::size_t j = 1; j < q; ++j) {
    std::vector<Complex> d(n);
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = root_of_unity(static_cast<long>(coloring.colors[k]) * static_cast<long>(j), q);
    }
    terms.push_back({1.0, Matrix::diagonal(d)});
  }
  return SignReversalMap(n, std::move(terms));
}

SignReversalMap reversal_from_coloring(const Graph& g, const Coloring& coloring,
                                       const WeightMatrix& w) {
  SignReversalMap map = reversal_from_coloring(g, coloring);
  const auto check = verify_reversal(map, weighted_adjacency(g, w));
  if (!check.ok) {
    throw ContractError("coloring map does not reverse W*A (residual " +
                        std::to_string(check.residual) + ")");
  }
  return map;
}

std::vector<Matrix> weyl_heisenberg_family(std::size_t n) {
  if (n < 1) throw ParameterError("weyl_heisenberg_family needs n >= 1");
  std::vector<Matrix> family;
  family.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (X^a Z^b)|c> = omega^{b c} |c + a>
      Matrix u(n);
      for (std::size_t c = 0; c < n; ++c) {
        u((c + a) % n, c) = root_of_unity(static_cast<long>(b * c), n);
      }
      family.push_back(std::move(u));
    }
  }
  return family;
}

HermitianMatrix schur_average(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return m;
  Matrix acc(n);
  for (const Matrix& u : weyl_heisenberg_family(n)) acc += u.adjoint() * m.matrix() * u;
  acc *= Complex(1.0 / static_cast<double>(n * n));
  return HermitianMatrix::from(acc, 1e-8);
}

SignReversalMap group_sign_reversal(std::size_t n) {
  if (n < 2) throw ParameterError("group_sign_reversal needs n >= 2");
  auto family = weyl_heisenberg_family(n);
  std::vector<ReversalTerm> terms;
  terms.reserve(family.size() - 1);
  for (std::size_t i = 1; i < family.size(); ++i) terms.push_back({1.0, std::move(family[i])});
  return SignReversalMap(n, std::move(terms));
}

SignReversalMap mix(const SignReversalMap& a, const SignReversalMap& b, double t) {
  if (a.dim() != b.dim()) throw DimensionError("mix: maps have different dimensions");
  if (!(t > 0.0 && t < 1.0)) throw ParameterError("mix: t must lie in (0, 1)");
  std::vector<ReversalTerm> terms;
  for (const auto& term : a.terms()) terms.push_back({t * term.weight, term.unitary});
  for (const auto& term : b.terms()) terms.push_back({(1.0 - t) * term.weight, term.unitary});
  return SignReversalMap(a.dim(), std::move(terms));
}

double cost_lower_bound(const HermitianMatrix& target) {
  const double norm = target.frobenius_norm();
  if (std::abs(target.trace()) > 1e-9 * std::max(1.0, norm)) {
    throw ContractError("cost_lower_bound: target is not traceless");
  }
  return minimal_tau(spectrum(target));
}

std::string serialize_map(const SignReversalMap& map) {
  nlohmann::ordered_json doc;
  doc["n"] = map.dim();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : map.terms()) {
    nlohmann::ordered_json term;
    term["r"] = detail::round12(t.weight);
    auto entries = nlohmann::ordered_json::array();
    for (const Complex& z : t.unitary.data()) {
      entries.push_back({detail::round12(z.real()), detail::round12(z.imag())});
    }
    term["u"] = std::move(entries);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump() + "\n";
}

SignReversalMap parse_map(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<ReversalTerm> terms;
    for (const auto& term : doc.at("terms")) {
      const auto& entries = term.at("u");
      if (entries.size() != n * n) throw ParseError(0, "unitary has wrong number of entries");
      Matrix u(n);
      for (std::size_t i = 0; i < n * n; ++i) {
        u(i / n, i % n) = {entries[i].at(0).get<double>(), entries[i].at(1).get<double>()};
      }
      terms.push_back({term.at("r").get<double>(), std::move(u)});
    }
    return SignReversalMap(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed sign reversal map: ") + e.what());
  }
}

}  // namespace chromabound
