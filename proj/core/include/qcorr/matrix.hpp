#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Dense row-major complex matrix sized for small Hilbert spaces.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix fromRows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// |v><v| for an (unnormalized) vector v.
  static ComplexMatrix projector(std::span<const Complex> v);
  /// Matrix whose columns are the given vectors.
  static ComplexMatrix fromColumns(const std::vector<std::vector<Complex>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool isSquare() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const;
  std::vector<Complex> row(std::size_t r) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  bool allFinite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product; row index of the result is i_a * b.rows() + i_b.
ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of two vectors.
std::vector<Complex> tensorProduct(std::span<const Complex> a, std::span<const Complex> b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |m - m^dagger| <= tol.
bool isHermitian(const ComplexMatrix& m, double tol = 1e-10);

/// max |m^dagger m - I| <= tol.
bool isUnitary(const ComplexMatrix& m, double tol = 1e-10);

/// <u|A|u> for a square A.
Complex expectation(const ComplexMatrix& a, std::span<const Complex> u);

/// A v.
std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v);

Complex innerProduct(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// Frobenius norm of the commutator [a, b].
double commutatorNorm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrices; index 0 is the identity.
ComplexMatrix pauli(int index);

}  // namespace qcorr
