#include "qcorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionMismatch("ComplexMatrix: " + std::to_string(data_.size()) +
                            " entries for a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " matrix");
  }
  if (!allFinite()) throw InvalidArgument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::fromRows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("fromRows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
  const std::size_t n = v.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::fromColumns(const std::vector<std::vector<Complex>>& columns) {
  const std::size_t c = columns.size();
  const std::size_t r = c == 0 ? 0 : columns.front().size();
  ComplexMatrix m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (columns[j].size() != r) throw DimensionMismatch("fromColumns: ragged columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<Complex> ComplexMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::allFinite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix addition: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix subtraction: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) noexcept {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex x = a(ia, ja);
      if (x == Complex{}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m(ia * b.rows() + ib, ja * b.cols() + jb) = x * b(ib, jb);
    }
  return m;
}

std::vector<Complex> tensorProduct(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<Complex> v(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = a[i] * b[j];
  return v;
}

double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("maxAbsDiff: shape mismatch");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

bool isHermitian(const ComplexMatrix& m, double tol) {
  if (!m.isSquare()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool isUnitary(const ComplexMatrix& m, double tol) {
  if (!m.isSquare()) return false;
  return maxAbsDiff(m.adjoint() * m, ComplexMatrix::identity(m.rows())) <= tol;
}

Complex expectation(const ComplexMatrix& a, std::span<const Complex> u) {
  Complex total = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * u[j];
    total += std::conj(u[i]) * row;
  }
  return total;
}

std::vector<Complex> apply(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("apply: size mismatch");
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Complex innerProduct(std::span<const Complex> u, std::span<const Complex> v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double commutatorNorm(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix c = a * b - b * a;
  double s = 0.0;
  for (const auto& z : c.entries()) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix pauli(int index) {
  using namespace std::complex_literals;
  switch (index) {
    case 0: return ComplexMatrix::identity(2);
    case 1: return ComplexMatrix::fromRows({{0.0, 1.0}, {1.0, 0.0}});
    case 2: return ComplexMatrix::fromRows({{0.0, -1i}, {1i, 0.0}});
    case 3: return ComplexMatrix::fromRows({{1.0, 0.0}, {0.0, -1.0}});
    default: throw InvalidArgument("pauli: index must be 0..3");
  }
}

}  // namespace qcorr
