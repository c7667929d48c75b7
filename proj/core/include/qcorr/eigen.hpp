#pragma once

#include <vector>

#include "qcorr/matrix.hpp"

namespace qcorr {

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k belongs to values[k]
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Eigenvalues come back ascending. Each eigenvector is phase-fixed so that its
/// largest-magnitude component (first one on ties) is real and positive, which
/// makes downstream eigenbasis choices deterministic. Throws NotHermitian when
/// max|m - m^dagger| exceeds `hermitianTol`.
HermitianEigen hermitianEigen(const ComplexMatrix& m, double hermitianTol = 1e-10);

std::vector<double> hermitianEigenvalues(const ComplexMatrix& m, double hermitianTol = 1e-10);

/// Rotate each column so its largest-magnitude entry is real positive.
void fixColumnPhases(ComplexMatrix& vectors);

}  // namespace qcorr
