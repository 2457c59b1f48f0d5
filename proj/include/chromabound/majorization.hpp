#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chromabound/spectrum.hpp"

namespace chromabound {

/// Copy of `x` in non-increasing order. Throws ContractError on NaN.
std::vector<double> sort_descending(std::span<const double> x);

struct PrefixViolation {
  std::size_t m = 0;  ///< 1-based prefix length
  double lhs = 0.0;   ///< sum of the m largest entries of x
  double rhs = 0.0;   ///< same for y
};

struct MajorizationReport {
  bool holds = false;
  std::optional<PrefixViolation> first_violation;
  double sum_gap = 0.0;  ///< |sum x - sum y|
};

/// Tests x ≺ y: every prefix sum of x sorted descending is at most the
/// matching prefix sum of y (plus tol) for m = 1..n-1, and the totals agree to tol.
MajorizationReport majorizes(std::span<const double> x, std::span<const double> y, double tol);

/// Smallest tau > 0 with Spec(-M) ≺ tau * Spec(M), for traceless Hermitian M
/// given by its spectrum:
///
///   tau = max_{m=1..n-1} (lambda_1 + ... + lambda_m) / -(lambda_n + ... + lambda_{n+1-m})
///
/// Prefixes whose denominator is below tol * ||spec||_2 are skipped.
/// Throws DegenerateError for an all-zero spectrum and ContractError when
/// |sum| > tol * ||spec||_2.
double minimal_tau(const Spectrum& spec, double tol = 1e-9);

}  // namespace chromabound
