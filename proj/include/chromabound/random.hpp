#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "chromabound/matrix.hpp"

namespace chromabound {

/// Seeded generator whose draws depend only on the mt19937_64 stream, so
/// results are reproducible across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, one draw per call).
  double normal();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Hermitian matrix with independent standard normal entries above the
/// diagonal (complex when `complex_entries`) and a real normal diagonal.
HermitianMatrix random_hermitian(std::size_t n, Rng& rng, bool complex_entries = true);

/// Same as random_hermitian with the trace removed.
HermitianMatrix random_traceless_hermitian(std::size_t n, Rng& rng, bool complex_entries = true);

/// Unitary from Gram-Schmidt on a complex Gaussian matrix.
Matrix random_unitary(std::size_t n, Rng& rng);

}  // namespace chromabound
