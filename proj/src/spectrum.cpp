#include "chromabound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw ContractError("spectrum entry is not finite");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double Spectrum::norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

Spectrum Spectrum::negated() const {
  std::vector<double> out(values_.rbegin(), values_.rend());
  for (double& v : out) v = -v;
  return Spectrum(std::move(out));
}

Spectrum Spectrum::scaled(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return Spectrum(std::move(out));
}

namespace {

struct RealEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // row-major, columns are eigenvectors
};

RealEigen real_kernel(const HermitianMatrix& m, const JacobiOptions& opts, bool want_vectors) {
  const std::size_t n = m.dim();
  const bool real = m.is_real();
  const std::size_t N = real ? n : 2 * n;
  std::vector<double> a(N * N);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex z = m(k, l);
      if (real) {
        a[k * N + l] = z.real();
      } else {
        a[k * N + l] = z.real();
        a[(k + n) * N + (l + n)] = z.real();
        a[k * N + (l + n)] = -z.imag();
        a[(k + n) * N + l] = z.imag();
      }
    }
  }
  RealEigen out;
  out.values = detail::jacobi_symmetric(a, N, opts, want_vectors ? &out.vectors : nullptr);
  return out;
}

void require_finite(const HermitianMatrix& m) {
  if (!m.matrix().is_finite()) throw ContractError("spectrum: matrix has non-finite entries");
}

// The embedding doubles every eigenvalue; sorted descending, entries 2i and
// 2i+1 must agree.
std::vector<double> dedupe_doubled(std::vector<double> doubled, double scale) {
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  const double pair_tol = 1e-8 * std::max(scale, 1e-300);
  std::vector<double> out(doubled.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double gap = std::abs(doubled[2 * i] - doubled[2 * i + 1]);
    if (gap > pair_tol) {
      throw ConvergenceError("complex eigenvalue pairing failed (gap " + std::to_string(gap) + ")",
                             gap);
    }
    out[i] = doubled[2 * i];
  }
  return out;
}

}  // namespace

Spectrum spectrum(const HermitianMatrix& m, const JacobiOptions& opts) {
  require_finite(m);
  RealEigen eig = real_kernel(m, opts, false);
  if (m.is_real()) return Spectrum(std::move(eig.values));
  return Spectrum(dedupe_doubled(std::move(eig.values), m.frobenius_norm()));
}

EigenDecomposition eigen_decompose(const HermitianMatrix& m, const JacobiOptions& opts) {
  require_finite(m);
  const std::size_t n = m.dim();
  RealEigen eig = real_kernel(m, opts, true);

  std::vector<double> values;
  std::vector<std::vector<Complex>> columns;
  if (m.is_real()) {
    values = eig.values;
    columns.assign(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) columns[j][k] = eig.vectors[k * n + j];
  } else {
    // Each real eigenvector [u; v] of the embedding gives the complex
    // eigenvector u + iv. Pairs within a doubled eigenspace are complex
    // multiples of each other, so pick n of the 2n candidates by pivoted
    // Gram-Schmidt: always take the candidate with the largest residual norm.
    const std::size_t N = 2 * n;
    std::vector<std::vector<Complex>> cand(N, std::vector<Complex>(n));
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < n; ++k)
        cand[j][k] = {eig.vectors[k * N + j], eig.vectors[(k + n) * N + j]};
    std::vector<double> resid(N, 1.0);
    std::vector<char> taken(N, 0);
    std::vector<double> picked_values;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = N;
      for (std::size_t j = 0; j < N; ++j)
        if (!taken[j] && (best == N || resid[j] > resid[best])) best = j;
      taken[best] = 1;
      std::vector<Complex> q = cand[best];
      double nq = 0.0;
      for (const Complex& z : q) nq += std::norm(z);
      nq = std::sqrt(nq);
      for (Complex& z : q) z /= nq;
      for (std::size_t j = 0; j < N; ++j) {
        if (taken[j]) continue;
        Complex dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += std::conj(q[k]) * cand[j][k];
        double r = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          cand[j][k] -= dot * q[k];
          r += std::norm(cand[j][k]);
        }
        resid[j] = r;
      }
      columns.push_back(std::move(q));
      picked_values.push_back(eig.values[best]);
    }
    values = std::move(picked_values);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  Matrix vectors(n);
  std::vector<double> sorted(n);
  for (std::size_t j = 0; j < n; ++j) {
    sorted[j] = values[order[j]];
    for (std::size_t k = 0; k < n; ++k) vectors(k, j) = columns[order[j]][k];
  }
  if (!m.is_real()) {
    // Report the deduplicated eigenvalues so spectrum() and eigen_decompose() agree.
    sorted = dedupe_doubled(eig.values, m.frobenius_norm());
  }
  return {Spectrum(std::move(sorted)), std::move(vectors)};
}

double max_residual(const HermitianMatrix& m, const EigenDecomposition& eig) {
  const std::size_t n = m.dim();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = eig.values[j];
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc = -lambda * eig.vectors(k, j);
      for (std::size_t l = 0; l < n; ++l) acc += m(k, l) * eig.vectors(l, j);
      r += std::norm(acc);
    }
    worst = std::max(worst, std::sqrt(r));
  }
  return worst;
}

EigenDecomposition verified_decompose(const HermitianMatrix& m, double tol) {
  EigenDecomposition eig = eigen_decompose(m);
  const double r = max_residual(m, eig);
  if (r > tol * m.frobenius_norm() && r > 0.0) {
    throw ConvergenceError("eigenpair residual " + std::to_string(r) + " exceeds tolerance", r);
  }
  return eig;
}

double min_eigenvalue(const HermitianMatrix& m) {
  if (m.dim() == 0) throw DimensionError("min_eigenvalue of an empty matrix");
  return spectrum(m).smallest();
}

double max_eigenvalue(const HermitianMatrix& m) {
  if (m.dim() == 0) throw DimensionError("max_eigenvalue of an empty matrix");
  return spectrum(m).largest();
}

}  // namespace chromabound
