#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

/// M pairwise mutually unbiased bases in dimension d.
struct MubFamily {
  std::size_t d = 0;
  std::vector<ProjectiveBasis> bases;

  std::size_t count() const noexcept { return bases.size(); }
};

/// Supported for d = 2 (M <= 3) and odd primes d (M <= d + 1). Throws
/// UnsupportedDimension for other d and InvalidArgument for M out of range.
MubFamily mubFamily(std::size_t d, std::size_t M);

/// Largest |<u|v>|^2 - 1/d deviation over all cross-basis pairs.
double mubUnbiasednessError(const MubFamily& family);

bool isPrime(std::size_t n) noexcept;

struct Prop3Bounds {
  double eq20 = 0.0;  ///< K-dependent bound
  double half = 0.0;  ///< (M/2) log2 dA
  std::size_t K = 0;
  bool eq20Stronger = false;  ///< eq20 < half
};

struct CorollaryBounds {
  double value = 0.0;      ///< state-independent bound
  double strictCap = 0.0;  ///< dA, never attained
};

/// log2 dA, the bound on I_m + I_n for any two unbiased bases.
double prop2Bound(std::size_t dA);
Prop3Bounds prop3Bounds(std::size_t dA, std::size_t M);
/// Requires (dA = 2, M = 3) or (dA an odd prime, M = dA + 1); rhoA is the
/// marginal of the measured side. Throws InvalidArgument otherwise.
double prop4Bound(const DensityMatrix& rhoA, std::size_t dA, std::size_t M);
CorollaryBounds corollaryBounds(std::size_t dA);

/// Whether prop4Bound / corollaryBounds apply to (dA, M).
bool completeMubSet(std::size_t dA, std::size_t M) noexcept;

struct BoundCheck {
  std::string name;
  double lhs = 0.0;    ///< the compared quantity (I_tot, or the largest pair sum)
  double bound = 0.0;
  bool applicable = false;
  bool satisfied = true;
};

inline constexpr double kBoundTolerance = 1e-9;

struct BoundReport {
  std::vector<double> iValues;
  double iTot = 0.0;
  double maxPairSum = 0.0;
  /// Fixed order: prop2, prop3_eq20, prop3_half, prop4, corollary_odd_even,
  /// corollary_strict. Entries that do not apply keep applicable = false.
  std::vector<BoundCheck> checks;

  bool allSatisfied() const noexcept;
};

/// I_m for Alice measuring in the m-th basis and Bob applying bobPovm, plus
/// every applicable bound. Throws DimensionMismatch if d != dimA or the POVM
/// does not act on B.
BoundReport iTotal(const DensityMatrix& rho, const MubFamily& mubs, const Povm& bobPovm);

/// Sum over the family of the Shannon entropies of the outcome
/// distributions of a single-system state.
double entropicSum(const DensityMatrix& rhoA, const MubFamily& mubs);

/// Best known state-independent lower bound on entropicSum for M bases in
/// dimension d (log2 d for M = 2).
double entropicLowerBound(std::size_t d, std::size_t M);

}  // namespace qcorr
