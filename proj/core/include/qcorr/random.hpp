#pragma once

#include <cstdint>
#include <random>

#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

using Rng = std::mt19937_64;

/// Independent stream seed derived from (base, stream) by SplitMix64 mixing.
std::uint64_t deriveSeed(std::uint64_t base, std::uint64_t stream) noexcept;

inline Rng makeRng(std::uint64_t base, std::uint64_t stream = 0) {
  return Rng(deriveSeed(base, stream));
}

/// d x d matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary: Gram-Schmidt on a Ginibre matrix, which yields
/// the QR factor with positive R diagonal (the phase-fixed Haar construction).
ComplexMatrix randomUnitary(std::size_t d, Rng& rng);
ComplexMatrix randomUnitary(std::size_t d, std::uint64_t seed);

/// G G^dagger / Tr, with G a dA dB x rank Ginibre matrix.
DensityMatrix randomDensityMatrix(std::size_t dimA, std::size_t dimB, std::size_t rank, Rng& rng);
DensityMatrix randomDensityMatrix(std::size_t dimA, std::size_t dimB, std::size_t rank,
                                  std::uint64_t seed);

/// Haar-random pure state vector of dimension d.
std::vector<Complex> randomPureVector(std::size_t d, Rng& rng);

/// Random rank-one POVM with `outcomes` elements on C^d, read off the rows
/// of a Haar-random isometry. Throws InvalidArgument for outcomes < d.
Povm randomRankOnePovm(std::size_t d, std::size_t outcomes, Rng& rng);

/// Modified Gram-Schmidt on the columns of m. Returns false (leaving `out`
/// unspecified) if a column norm falls below `minNorm` relative to its input.
bool orthonormalizeColumns(const ComplexMatrix& m, ComplexMatrix& out, double minNorm = 1e-10);

}  // namespace qcorr
