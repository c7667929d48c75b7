#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/optimizer.hpp"

namespace qcorr {

/// Closed-form values supplied with a state family (bits).
struct FamilyAnalytics {
  double smut = 0.0;
  double ipMax = 0.0;
  double qP = 0.0;
};

// ---------------------------------------------------------------------------
// Two-qubit states with maximally mixed marginals,
//   rho = (I + sum_jk w_jk sigma_j (x) sigma_k) / 4.

/// Signed correlation coefficients r_j of the locally diagonalized form
/// (I + sum_j r_j sigma_j (x) sigma_j) / 4. Signs are kept so that the
/// singlet is r = (-1, -1, -1).
struct TwoQubitParams {
  std::array<double, 3> r{};
};

/// Eigenvalues lambda_0..lambda_3 of the state with coefficients r.
std::array<double, 4> twoQubitEigenvalues(const TwoQubitParams& params);

/// Throws InvalidState if some lambda_j < -1e-12 or |r_j| > 1.
DensityMatrix twoQubitState(const TwoQubitParams& params);

/// General form from a real 3x3 correlation matrix w (row-major).
DensityMatrix twoQubitStateFromCorrelation(const std::array<double, 9>& w);

/// Signed r for a correlation matrix: its singular values, with the sign of
/// det(w) carried by the last one.
TwoQubitParams signedSingularValues(const std::array<double, 9>& w);

/// S(A:B) = 2 - H{lambda}, I^p_max = 1 - H{(1 +- r_m)/2}, Q^p = difference,
/// with r_m = max |r_j|.
FamilyAnalytics twoQubitAnalytics(const TwoQubitParams& params);

// ---------------------------------------------------------------------------
// Werner states (I - alpha P) / (d^2 - d alpha), P the swap operator.

struct WernerParams {
  std::size_t d = 2;
  double alpha = 0.0;
};

/// Throws InvalidArgument for d < 2 and InvalidState for alpha outside [-1, 1].
DensityMatrix wernerState(const WernerParams& params);
FamilyAnalytics wernerAnalytics(const WernerParams& params);

/// Swap operator on C^d (x) C^d.
ComplexMatrix swapOperator(std::size_t d);

// ---------------------------------------------------------------------------
// Locking states. Subsystem A is A1 (x) A2 with A1 a qubit carrying t and A2
// a qudit carrying i, so dimA = 2d and dimB = d.

struct LockingParams {
  std::size_t d = 2;
  ComplexMatrix u1;  ///< |<i|U1|j>|^2 = 1/d for all i, j

  /// Discrete Fourier U1.
  static LockingParams fourier(std::size_t d);
};

/// (1/2d) sum_t sum_i |t><t| (x) |i><i| (x) U_t|i><i|U_t^dagger with U_0 = I.
/// Throws InvalidArgument if U1 is not unitary or not unbiased within 1e-9.
DensityMatrix lockingState(const LockingParams& params);

/// (1/2d) sum_t sum_i |t><t| (x) |i><i| (x) |i+t mod d><i+t mod d|.
DensityMatrix sigmaLockingState(std::size_t d);

enum class LockingVariant { Unbiased, Shift };

/// Outcome of the explicit one-bit protocol: Alice measures t and i and
/// sends t; Bob measures in {U_t|i>} (Unbiased) or {|i>} (Shift).
struct LockingReport {
  std::size_t d = 0;
  double smut = 0.0;
  double iMaxNoComm = 0.0;    ///< heuristic I^p_max without communication
  double iWithComm = 0.0;     ///< I' of the records including the sent bit
  double commCost = 1.0;      ///< bits sent
  double iAfterOneBit = 0.0;  ///< iWithComm - commCost
  double unlockGain = 0.0;    ///< iWithComm - commCost - iMaxNoComm
};

LockingReport lockingDemo(const LockingParams& params, const OptimizerConfig& cfg);
LockingReport sigmaLockingDemo(std::size_t d, const OptimizerConfig& cfg);

/// Joint distribution of Alice's record (t, i) and Bob's record (t, s) in the
/// one-bit protocol; Bob measures with `bobBasis[t]`.
JointDistribution lockingProtocolDistribution(const DensityMatrix& rho, std::size_t d,
                                              const std::array<ProjectiveBasis, 2>& bobBasis);

// ---------------------------------------------------------------------------
// Classical-quantum states sum_i p_i |i><i| (x) rho_i^B.

/// Throws DimensionMismatch if the counts or dimensions disagree.
DensityMatrix cqState(std::span<const double> probs, const ProjectiveBasis& basisA,
                      std::span<const DensityMatrix> condStates);
DensityMatrix cqState(std::span<const double> probs, std::span<const DensityMatrix> condStates);

/// Qutrit (x) qubit trine state: sum_i (1/3)|i><i| (x) |phi_i><phi_i| with the
/// Bloch vectors of |phi_i> at angles 0, 2pi/3, 4pi/3 in the x-z plane.
DensityMatrix trineState();

/// Bloch-plane angle of the i-th trine vector.
double trineAngle(std::size_t i);

struct TrineGridOptimum {
  double value = 0.0;
  double theta = 0.0;  ///< polar Bloch angle of Bob's first basis vector
  double phi = 0.0;    ///< azimuth
};

/// Brute-force projective optimum for the trine state: Alice measures
/// {|i>}, Bob's basis is swept over theta in linspace(0, pi, perAxis) and
/// phi = 2 pi k / perAxis, perAxis^2 points in total.
TrineGridOptimum trineProjectiveGrid(std::size_t perAxis = 100);

/// sum_ij p_ij |psi_i><psi_i| (x) |phi_j><phi_j| for a dA x dB probability
/// table (row-major).
DensityMatrix biorthogonalState(std::span<const double> pMatrix, const ProjectiveBasis& basisA,
                                const ProjectiveBasis& basisB);

}  // namespace qcorr
