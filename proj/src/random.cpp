#include "chromabound/random.hpp"

#include <cmath>
#include <numbers>

namespace chromabound {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng, bool complex_entries) {
  HermitianMatrix h(n);
  for (std::size_t k = 0; k < n; ++k) {
    h.set(k, k, rng.normal());
    for (std::size_t l = k + 1; l < n; ++l) {
      const double re = rng.normal();
      const double im = complex_entries ? rng.normal() : 0.0;
      h.set(k, l, {re, im});
    }
  }
  return h;
}

HermitianMatrix random_traceless_hermitian(std::size_t n, Rng& rng, bool complex_entries) {
  HermitianMatrix h = random_hermitian(n, rng, complex_entries);
  if (n == 0) return h;
  const double shift = h.trace() / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) h.set(k, k, h(k, k).real() - shift);
  return h;
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix q(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) q(r, c) = {rng.normal(), rng.normal()};
  // Modified Gram-Schmidt on columns, applied twice for orthogonality to machine precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, p)) * q(r, c);
        for (std::size_t r = 0; r < n; ++r) q(r, c) -= dot * q(r, p);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) q(r, c) /= norm;
    }
  }
  return q;
}

}  // namespace chromabound
