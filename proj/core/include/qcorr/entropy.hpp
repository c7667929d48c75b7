#pragma once

#include <span>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// A probability vector. Entries in [-1e-12, 0) are clamped to zero; more
/// negative entries, or a sum further than 1e-9 from one when `normalized` is
/// requested, throw InvalidArgument.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs, bool normalized = true);

  std::span<const double> values() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }
  operator std::span<const double>() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

/// -sum p log2 p over entries above 1e-12 (zero-probability outcomes dropped).
double shannonEntropy(std::span<const double> p);

/// H{(1+x)/2, (1-x)/2}, the entropy of a binary distribution with bias x.
double binaryEntropyOfBias(double x);

/// -sum lambda log2 lambda over the eigenvalues. Eigenvalues in [-1e-10, 0)
/// are treated as zero; a more negative one throws InvalidState.
double vonNeumannEntropy(const ComplexMatrix& rho);
double vonNeumannEntropy(const DensityMatrix& rho);

/// Eigenvalues with the same clamping used for entropies.
std::vector<double> clampedSpectrum(const ComplexMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);
double purity(const ComplexMatrix& rho);

}  // namespace qcorr
