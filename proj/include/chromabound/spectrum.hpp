#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chromabound/matrix.hpp"

namespace chromabound {

/// Real eigenvalues sorted non-increasing: values()[0] is lambda_1, back() is lambda_n.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` descending. Throws ContractError on NaN or infinite entries.
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }
  double sum() const;
  /// Euclidean norm of the eigenvalue vector (= ||M||_F for Hermitian M).
  double norm() const;

  /// Spectrum of -M: entries negated and reversed, so mu_i = -lambda_{n+1-i}.
  Spectrum negated() const;
  Spectrum scaled(double c) const;

 private:
  std::vector<double> values_;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is <= off_tol * ||M||_F.
  double off_tol = 1e-12;
  int max_sweeps = 100;
};

/// Eigenpairs: column i of `vectors` is a unit eigenvector for `values[i]`.
struct EigenDecomposition {
  Spectrum values;
  Matrix vectors;
};

/// All eigenvalues via cyclic Jacobi. Real input runs the n x n real kernel
/// directly; complex input X + iY goes through the 2n x 2n real embedding
/// [[X, -Y], [Y, X]], whose eigenvalues are those of the input, each doubled.
///
/// Throws ContractError on non-finite input and ConvergenceError when the
/// sweep cap is hit or the doubled eigenvalues fail to pair up.
Spectrum spectrum(const HermitianMatrix& m, const JacobiOptions& opts = {});

EigenDecomposition eigen_decompose(const HermitianMatrix& m, const JacobiOptions& opts = {});

/// max_i ||M v_i - lambda_i v_i||_2.
double max_residual(const HermitianMatrix& m, const EigenDecomposition& eig);

/// Decomposes and checks max_residual <= tol * ||M||_F; throws ConvergenceError otherwise.
EigenDecomposition verified_decompose(const HermitianMatrix& m, double tol = 1e-9);

double min_eigenvalue(const HermitianMatrix& m);
double max_eigenvalue(const HermitianMatrix& m);

namespace detail {

/// Cyclic Jacobi on a dense row-major symmetric matrix `a` (n x n), which is
/// overwritten. Returns the diagonal after convergence. When `vectors` is
/// non-null it receives the accumulated rotations (row-major, columns are
/// eigenvectors).
std::vector<double> jacobi_symmetric(std::vector<double>& a, std::size_t n,
                                     const JacobiOptions& opts, std::vector<double>* vectors);

}  // namespace detail
}  // namespace chromabound
