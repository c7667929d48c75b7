#include "qcorr/density.hpp"

#include <cmath>
#include <sstream>

#include "qcorr/eigen.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

void validateDensityMatrix(const ComplexMatrix& m) {
  if (!m.isSquare()) throw InvalidState("density matrix is not square");
  if (m.rows() == 0) throw InvalidState("density matrix is empty");
  if (!m.allFinite()) throw InvalidState("density matrix has non-finite entries");
  if (!isHermitian(m, StateTolerance::hermitian))
    throw InvalidState("density matrix is not Hermitian (tolerance 1e-10)");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > StateTolerance::trace) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << ", expected 1 (tolerance 1e-10)";
    throw InvalidState(os.str());
  }
  const auto values = hermitianEigenvalues(m, StateTolerance::hermitian);
  if (values.front() < -StateTolerance::negativeEigenvalue) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix is not positive semidefinite (smallest eigenvalue " << values.front()
       << ")";
    throw InvalidState(os.str());
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::size_t dimA, std::size_t dimB)
    : matrix_(std::move(matrix)), dimA_(dimA), dimB_(dimB) {
  if (dimA == 0 || dimB == 0 || dimA * dimB != matrix_.rows() || !matrix_.isSquare()) {
    std::ostringstream os;
    os << "dimA*dimB = " << dimA << "*" << dimB << " does not match a " << matrix_.rows() << "x"
       << matrix_.cols() << " matrix";
    throw DimensionMismatch(os.str());
  }
  validateDensityMatrix(matrix_);
}

DensityMatrix DensityMatrix::single(ComplexMatrix matrix) {
  const std::size_t n = matrix.rows();
  return DensityMatrix(std::move(matrix), n, 1);
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi, std::size_t dimA,
                                  std::size_t dimB) {
  const double nrm = norm(psi);
  if (nrm <= 0.0) throw InvalidState("pure state vector has zero norm");
  ComplexMatrix m = ComplexMatrix::projector(psi);
  m *= 1.0 / (nrm * nrm);
  return DensityMatrix(std::move(m), dimA, dimB);
}

DensityMatrix DensityMatrix::maximallyMixed(std::size_t dimA, std::size_t dimB) {
  ComplexMatrix m = ComplexMatrix::identity(dimA * dimB);
  m *= 1.0 / static_cast<double>(dimA * dimB);
  return DensityMatrix(std::move(m), dimA, dimB);
}

ComplexMatrix partialTrace(const ComplexMatrix& m, std::size_t dimA, std::size_t dimB,
                           Subsystem keep) {
  if (!m.isSquare() || dimA * dimB != m.rows())
    throw DimensionMismatch("partialTrace: dimA*dimB does not match the matrix dimension");
  if (keep == Subsystem::A) {
    ComplexMatrix r(dimA, dimA);
    for (std::size_t i = 0; i < dimA; ++i)
      for (std::size_t j = 0; j < dimA; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < dimB; ++k) s += m(i * dimB + k, j * dimB + k);
        r(i, j) = s;
      }
    return r;
  }
  ComplexMatrix r(dimB, dimB);
  for (std::size_t i = 0; i < dimB; ++i)
    for (std::size_t j = 0; j < dimB; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dimA; ++k) s += m(k * dimB + i, k * dimB + j);
      r(i, j) = s;
    }
  return r;
}

DensityMatrix partialTrace(const DensityMatrix& rho, Subsystem keep) {
  return DensityMatrix::single(partialTrace(rho.matrix(), rho.dimA(), rho.dimB(), keep));
}

DensityMatrix swapSubsystems(const DensityMatrix& rho) {
  const std::size_t da = rho.dimA();
  const std::size_t db = rho.dimB();
  ComplexMatrix out(rho.dim(), rho.dim());
  const auto& m = rho.matrix();
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2)
          out(b * da + a, b2 * da + a2) = m(a * db + b, a2 * db + b2);
  return DensityMatrix(std::move(out), db, da);
}

DensityMatrix productState(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensorProduct(a.matrix(), b.matrix()), a.dim(), b.dim());
}

DensityMatrix applyLocalUnitaries(const DensityMatrix& rho, const ComplexMatrix& ua,
                                  const ComplexMatrix& ub) {
  if (ua.rows() != rho.dimA() || ub.rows() != rho.dimB())
    throw DimensionMismatch("applyLocalUnitaries: unitary sizes do not match the state split");
  const ComplexMatrix u = tensorProduct(ua, ub);
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  // Restore exact Hermiticity lost to rounding.
  const ComplexMatrix h = (m + m.adjoint()) * Complex(0.5);
  return DensityMatrix(h, rho.dimA(), rho.dimB());
}

}  // namespace qcorr
