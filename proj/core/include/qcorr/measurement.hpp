#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

class Povm;

/// Orthonormal basis stored as the columns of a unitary.
class ProjectiveBasis {
 public:
  /// Throws InvalidArgument unless the Gram matrix is the identity within 1e-9.
  explicit ProjectiveBasis(ComplexMatrix unitary);

  static ProjectiveBasis computational(std::size_t d);
  /// Discrete Fourier basis, F_jk = omega^{jk} / sqrt(d).
  static ProjectiveBasis fourier(std::size_t d);

  std::size_t dim() const noexcept { return unitary_.rows(); }
  const ComplexMatrix& unitary() const noexcept { return unitary_; }
  std::vector<Complex> vector(std::size_t k) const { return unitary_.column(k); }

  Povm toPovm() const;

 private:
  ComplexMatrix unitary_;
};

/// Local measurement: PSD effects summing to the identity.
class Povm {
 public:
  /// Throws InvalidArgument unless each effect is PSD within 1e-10 and the
  /// effects sum to the identity within 1e-9.
  explicit Povm(std::vector<ComplexMatrix> effects);

  /// Rank-one POVM with effects |K_s><K_s|.
  static Povm fromRankOne(std::vector<std::vector<Complex>> vectors);
  /// Rank-one POVM whose vectors <K_s| are the rows of an nOut x d isometry.
  static Povm fromIsometryRows(const ComplexMatrix& isometry);
  /// Single-outcome measurement {I}.
  static Povm trivial(std::size_t d);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t outcomes() const noexcept { return effects_.size(); }
  const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
  const ComplexMatrix& effect(std::size_t k) const { return effects_.at(k); }
  const std::optional<std::vector<std::vector<Complex>>>& rankOneVectors() const noexcept {
    return rankOne_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> effects_;
  std::optional<std::vector<std::vector<Complex>>> rankOne_;
};

/// Joint outcome table p_is of Alice's and Bob's measurement records.
class JointDistribution {
 public:
  /// Entries >= -1e-12 (clamped to zero); total within 1e-9 of one.
  JointDistribution(std::size_t rowsA, std::size_t colsB, std::vector<double> table);

  std::size_t outcomesA() const noexcept { return rows_; }
  std::size_t outcomesB() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t s) const noexcept { return table_[i * cols_ + s]; }
  std::span<const double> table() const noexcept { return table_; }

  std::vector<double> marginalA() const;
  std::vector<double> marginalB() const;

  /// Merge outcomes: groupA[i] / groupB[s] name the bin of each outcome.
  JointDistribution binned(std::span<const std::size_t> groupA,
                           std::span<const std::size_t> groupB) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
};

/// p_is = Tr[(M_i (x) M_s) rho].
JointDistribution jointDistribution(const DensityMatrix& rho, const Povm& measA,
                                    const Povm& measB);

/// Joint distribution for rank-one measurements given as vectors, without
/// building effect matrices. Used on the optimizer's inner loop.
JointDistribution jointDistributionRankOne(const DensityMatrix& rho,
                                           const std::vector<std::vector<Complex>>& vecsA,
                                           const std::vector<std::vector<Complex>>& vecsB);

/// H{p_i} + H{p_s} - H{p_is}, clamped at zero.
double classicalMutualInfo(const JointDistribution& jd);

/// Classical mutual information of measuring both sides in the given bases.
double mutualInfoForBases(const DensityMatrix& rho, const ProjectiveBasis& basisA,
                          const ProjectiveBasis& basisB);

struct ConditionalState {
  double probability;
  DensityMatrix state;
};

/// Ensemble {p_i, rho_i^B} left on B by Alice's measurement. Outcomes with
/// p_i < 1e-12 are omitted.
std::vector<ConditionalState> conditionalStatesB(const DensityMatrix& rho, const Povm& measA);

/// Ensemble {p_s, rho_s^A} left on A by Bob's measurement.
std::vector<ConditionalState> conditionalStatesA(const DensityMatrix& rho, const Povm& measB);

/// S(rho_B) - sum_i p_i S(rho_i^B) for a fixed measurement on A.
double holevoQuantityB(const DensityMatrix& rho, const Povm& measA);

}  // namespace qcorr
