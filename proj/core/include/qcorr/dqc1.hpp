#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

enum class PhaseModel { Uniform, Haar, FromUnitary, Explicit };

std::string toString(PhaseModel m);
/// Accepts "uniform" and "haar". Throws InvalidArgument otherwise.
PhaseModel parsePhaseModel(const std::string& name);

/// One clean qubit with polarization alpha controlling a unitary on n qubits,
/// kept as the 2^n eigenphases of that unitary. Subsystem A is the control
/// qubit and B the n target qubits.
struct Dqc1Model {
  std::size_t n = 0;
  double alpha = 0.0;
  std::vector<double> phases;  ///< theta_i in [0, 2 pi), length 2^n
  PhaseModel source = PhaseModel::Explicit;
  std::uint64_t seed = 0;  ///< Haar draws only

  /// theta_s = 2 pi s / 2^n.
  static Dqc1Model uniform(std::size_t n, double alpha);
  /// Eigenphases of a Haar-random unitary drawn from `seed`, sorted.
  static Dqc1Model haar(std::size_t n, double alpha, std::uint64_t seed);
  /// Eigenphases of a given 2^n x 2^n unitary, sorted.
  static Dqc1Model fromUnitary(const ComplexMatrix& u, double alpha);
  /// Phases are reduced into [0, 2 pi). Throws InvalidArgument if the count is
  /// not a power of two.
  static Dqc1Model fromPhases(std::vector<double> phases, double alpha);

  std::size_t dimTarget() const noexcept { return phases.size(); }
  /// Throws InvalidArgument unless alpha is in [0, 1] and the phase list has
  /// length 2^n with entries in [0, 2 pi).
  void validate() const;
  /// Same phases at another polarization.
  Dqc1Model withAlpha(double a) const;
};

/// Largest n for which dense states are built.
inline constexpr std::size_t kMaxExplicitQubits = 6;
/// Largest n accepted by the Haar sampler.
inline constexpr std::size_t kMaxHaarQubits = 12;

/// Eigenphases in [0, 2 pi) of a unitary, sorted ascending.
std::vector<double> unitaryEigenphases(const ComplexMatrix& u);

/// 2^-n sum_i exp(i theta_i).
Complex normalizedTrace(const Dqc1Model& model);
/// beta = alpha 2^-n sum_i exp(i theta_i).
Complex dqc1Beta(const Dqc1Model& model);

/// 2^-(n+1) [ |0><0| (x) I + |1><1| (x) I + alpha |0><1| (x) U^dagger
///           + alpha |1><0| (x) U ] with U = diag(exp(i theta)).
/// Throws UnsupportedDimension for n > kMaxExplicitQubits.
DensityMatrix buildExplicitState(const Dqc1Model& model);

/// The same state assembled as 2^-n sum_i (qubit block of theta_i) (x) |e_i><e_i|.
DensityMatrix blockSumState(const Dqc1Model& model);

struct TraceEstimate {
  Complex estimate;
  std::size_t shots = 0;
  double standardError = 0.0;  ///< combined over the real and imaginary parts
};

/// Simulates `shots` single-shot sigma_1 and sigma_2 measurements of the
/// control qubit each and returns (mean_1 + i mean_2) / alpha. Throws
/// InvalidArgument for shots == 0 or alpha == 0.
TraceEstimate traceEstimate(const Dqc1Model& model, std::size_t shots, std::uint64_t seed);

/// S(A:B) = H{(1 +- |beta|)/2} - H{(1 +- alpha)/2}.
double dqc1Smut(const Dqc1Model& model);
/// The same quantity with beta set to zero, 1 - H{(1 +- alpha)/2}.
double dqc1SmutTypical(double alpha);

/// Mutual information when Alice measures along direction phi of the
/// equator (theta = pi/4) and Bob measures in the eigenbasis of U.
double dqc1InformationAt(const Dqc1Model& model, double phi);

/// The marginal-uniformity approximation 1 - 2^-n sum_s H{(1 +- delta_s)/2}.
double dqc1InformationApprox(const Dqc1Model& model, double phi);

struct Dqc1Information {
  double value = 0.0;
  double phi = 0.0;
};

/// Maximum of dqc1InformationAt over a uniform phi grid of `phiGrid` points
/// followed by golden-section refinement around the best point.
Dqc1Information dqc1IpMax(const Dqc1Model& model, std::size_t phiGrid = 720);

/// Local bases attaining dqc1InformationAt(model, phi); useful as optimizer
/// seeds on the explicit state.
BasisPair dqc1Bases(const Dqc1Model& model, double phi);

/// S(A:B) - I at the optimized phi, clamped at zero.
double dqc1Q(const Dqc1Model& model, std::size_t phiGrid = 720);

/// 2^-n sum_s H{(1 +- alpha cos(2 pi s / 2^n))/2} - H{(1 +- alpha)/2}, the
/// typical-unitary nonclassicality.
double dqc1QTypical(std::size_t n, double alpha);

struct Dqc1ScanRow {
  double alpha = 0.0;
  double smut = 0.0;
  double ipMax = 0.0;
  double q = 0.0;
};

/// alpha = k / (alphaSteps - 1) for k = 0 .. alphaSteps - 1. The phases are
/// drawn once (Haar) and reused for every alpha. Throws InvalidArgument for
/// alphaSteps < 2 and for FromUnitary / Explicit models.
std::vector<Dqc1ScanRow> dqc1Scan(std::size_t n, std::size_t alphaSteps, PhaseModel model,
                                  std::uint64_t seed = 0);

}  // namespace qcorr
