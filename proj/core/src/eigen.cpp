#include "qcorr/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

constexpr int kMaxSweeps = 100;

double offDiagonalNorm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobeniusNorm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

// Zero a(p,q) with V = D(phi) R(theta) acting on coordinates (p,q):
//   v_p = (c, -s e^{-i phi}),  v_q = (s, c e^{-i phi})
// where a(p,q) = |a| e^{i phi} and tan(2 theta) = 2|a| / (a_qq - a_pp).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex vpp = c;
  const Complex vqp = -s * std::conj(phase);
  const Complex vpq = s;
  const Complex vqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * vpp + akq * vqp;
    a(k, q) = akp * vpq + akq * vqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex wkp = v(k, p);
    const Complex wkq = v(k, q);
    v(k, p) = wkp * vpp + wkq * vqp;
    v(k, q) = wkp * vpq + wkq * vqq;
  }
}

}  // namespace

void fixColumnPhases(ComplexMatrix& vectors) {
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    double best = -1.0;
    for (std::size_t i = 0; i < vectors.rows(); ++i) best = std::max(best, std::abs(vectors(i, j)));
    if (best <= 0.0) continue;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
      if (std::abs(vectors(i, j)) >= best * (1.0 - 1e-12)) {
        pivot = i;
        break;
      }
    }
    const Complex z = vectors(pivot, j);
    const Complex rot = std::conj(z) / std::abs(z);
    for (std::size_t i = 0; i < vectors.rows(); ++i) vectors(i, j) *= rot;
    vectors(pivot, j) = std::abs(vectors(pivot, j));
  }
}

HermitianEigen hermitianEigen(const ComplexMatrix& m, double hermitianTol) {
  if (!m.isSquare()) throw NotHermitian("hermitianEigen: matrix is not square");
  if (!isHermitian(m, hermitianTol)) throw NotHermitian("hermitianEigen: matrix is not Hermitian");
  const std::size_t n = m.rows();

  // Symmetrize so rotations act on an exactly Hermitian matrix.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(frobeniusNorm(a), 1e-300);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offDiagonalNorm(a) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen result;
  result.values.resize(n);
  result.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  fixColumnPhases(result.vectors);
  return result;
}

std::vector<double> hermitianEigenvalues(const ComplexMatrix& m, double hermitianTol) {
  return hermitianEigen(m, hermitianTol).values;
}

}  // namespace qcorr
