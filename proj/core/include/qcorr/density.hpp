#pragma once

#include <cstddef>
#include <span>

#include "qcorr/matrix.hpp"

namespace qcorr {

enum class Subsystem { A, B };

/// Tolerances shared by every density-matrix check.
struct StateTolerance {
  static constexpr double hermitian = 1e-10;
  static constexpr double trace = 1e-10;
  static constexpr double negativeEigenvalue = 1e-10;
};

/// Hermitian, positive semidefinite, unit-trace matrix on C^dimA (x) C^dimB.
///
/// Construction validates every invariant and throws InvalidState (or
/// DimensionMismatch for a bad split) naming the violated one. A single
/// system is represented with dimB == 1.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::size_t dimA, std::size_t dimB);

  /// Single-system state (dimB = 1).
  static DensityMatrix single(ComplexMatrix matrix);
  /// |psi><psi| / <psi|psi> on dimA x dimB.
  static DensityMatrix pure(std::span<const Complex> psi, std::size_t dimA, std::size_t dimB);
  /// I / (dimA dimB).
  static DensityMatrix maximallyMixed(std::size_t dimA, std::size_t dimB = 1);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimA() const noexcept { return dimA_; }
  std::size_t dimB() const noexcept { return dimB_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  std::size_t dimA_;
  std::size_t dimB_;
};

/// Throws InvalidState describing the first violated invariant, if any.
void validateDensityMatrix(const ComplexMatrix& m);

/// Reduced state on the kept subsystem, as a single-system DensityMatrix.
DensityMatrix partialTrace(const DensityMatrix& rho, Subsystem keep);

/// Partial trace of a raw (not necessarily normalized) operator; throws
/// DimensionMismatch when dimA * dimB differs from the matrix dimension.
ComplexMatrix partialTrace(const ComplexMatrix& m, std::size_t dimA, std::size_t dimB,
                           Subsystem keep);

/// rho_AB -> rho_BA.
DensityMatrix swapSubsystems(const DensityMatrix& rho);

/// rho_A (x) rho_B.
DensityMatrix productState(const DensityMatrix& a, const DensityMatrix& b);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger.
DensityMatrix applyLocalUnitaries(const DensityMatrix& rho, const ComplexMatrix& ua,
                                  const ComplexMatrix& ub);

}  // namespace qcorr
