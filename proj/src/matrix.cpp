#include "chromabound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool Matrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_dim(n_, o.n_, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_dim(n_, o.n_, "matrix subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.n_, b.n_, "matrix multiply");
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

bool is_unitary(const Matrix& u, double tol) {
  if (!u.is_finite()) return false;
  Matrix defect = u.adjoint() * u;
  defect -= Matrix::identity(u.dim());
  return defect.frobenius_norm() <= tol;
}

HermitianMatrix HermitianMatrix::from(const Matrix& m, double tol) {
  if (!m.is_finite()) throw ContractError("matrix has non-finite entries");
  const double defect = (m - m.adjoint()).frobenius_norm();
  if (defect > tol * std::max(1.0, m.frobenius_norm())) {
    throw ContractError("matrix is not Hermitian (||M - M^H||_F = " + std::to_string(defect) + ")");
  }
  HermitianMatrix h(m.dim());
  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {
    h.m_(k, k) = m(k, k).real();
    for (std::size_t l = k + 1; l < n; ++l) {
      const Complex v = 0.5 * (m(k, l) + std::conj(m(l, k)));
      h.m_(k, l) = v;
      h.m_(l, k) = std::conj(v);
    }
  }
  return h;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  HermitianMatrix h(n);
  h.m_ = Matrix::identity(n);
  return h;
}

HermitianMatrix HermitianMatrix::real_diagonal(std::span<const double> d) {
  HermitianMatrix h(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) h.set(i, i, d[i]);
  return h;
}

void HermitianMatrix::set(std::size_t k, std::size_t l, Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ContractError("non-finite matrix entry");
  }
  if (k == l) {
    if (v.imag() != 0.0) throw ContractError("Hermitian diagonal entries must be real");
    m_(k, k) = v;
    return;
  }
  m_(k, l) = v;
  m_(l, k) = std::conj(v);
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianMatrix hadamard_product(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x.dim(), y.dim(), "hadamard_product");
  const std::size_t n = x.dim();
  HermitianMatrix out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l) {
      Complex v = x(k, l) * y(k, l);
      if (k == l) v = v.real();
      out.set(k, l, v);
    }
  return out;
}

HermitianMatrix conjugate(const HermitianMatrix& m, const Matrix& u) {
  require_same_dim(m.dim(), u.dim(), "conjugate");
  if (!is_unitary(u)) throw ContractError("conjugate: matrix is not unitary");
  return HermitianMatrix::from(u.adjoint() * m.matrix() * u, 1e-8);
}

}  // namespace chromabound
