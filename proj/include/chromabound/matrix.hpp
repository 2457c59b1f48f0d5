#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chromabound {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> d);

  std::size_t dim() const { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool is_finite() const;
  bool is_real() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Complex s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// ||U^dagger U - I||_F <= tol.
bool is_unitary(const Matrix& u, double tol = 1e-10);

/// Dense complex Hermitian matrix. Symmetry is exact: every write goes to
/// both triangles, and construction from a general Matrix symmetrizes.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : m_(n) {}

  /// Throws ContractError when `m` has non-finite entries or
  /// ||m - m^dagger||_F > tol * max(1, ||m||_F); otherwise returns (m + m^dagger)/2.
  static HermitianMatrix from(const Matrix& m, double tol = 1e-9);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix real_diagonal(std::span<const double> d);

  std::size_t dim() const { return m_.dim(); }
  Complex operator()(std::size_t k, std::size_t l) const { return m_(k, l); }

  /// Sets entry (k,l) to v and (l,k) to conj(v). A diagonal value must be real.
  void set(std::size_t k, std::size_t l, Complex v);

  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.frobenius_norm(); }
  bool is_real() const { return m_.is_real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator-(HermitianMatrix a) { return a *= -1.0; }
  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  Matrix m_;
};

/// Entrywise product. The Hadamard product of two Hermitian matrices is Hermitian.
HermitianMatrix hadamard_product(const HermitianMatrix& x, const HermitianMatrix& y);

/// U^dagger M U. Throws ContractError if `u` is not unitary to 1e-10.
HermitianMatrix conjugate(const HermitianMatrix& m, const Matrix& u);

}  // namespace chromabound
