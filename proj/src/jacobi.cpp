#include <cmath>
#include <string>

#include "chromabound/errors.hpp"
#include "chromabound/spectrum.hpp"

namespace chromabound::detail {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_symmetric(std::vector<double>& a, std::size_t n,
                                     const JacobiOptions& opts, std::vector<double>* vectors) {
  if (vectors) {
    vectors->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*vectors)[i * n + i] = 1.0;
  }
  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);

  const double target = opts.off_tol * norm;
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > target) {
    if (sweep++ >= opts.max_sweeps) {
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                                 " sweeps (off-diagonal norm " + std::to_string(off) + ")",
                             off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A J, then A <- J^T A, with J the (p,q) plane rotation [[c, s], [-s, c]].
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0.0;

        if (vectors) {
          auto& v = *vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  return diag;
}

}  // namespace chromabound::detail
