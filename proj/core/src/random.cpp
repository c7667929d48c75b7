#include "qcorr/random.hpp"

#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

std::uint64_t deriveSeed(std::uint64_t base, std::uint64_t stream) noexcept {
  auto mix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  return mix(mix(base) ^ mix(stream + 0x632BE59BD9B4E019ULL));
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  return g;
}

bool orthonormalizeColumns(const ComplexMatrix& m, ComplexMatrix& out, double minNorm) {
  out = m;
  const std::size_t rows = m.rows();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double original = 0.0;
    for (std::size_t i = 0; i < rows; ++i) original += std::norm(out(i, j));
    original = std::sqrt(original);
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < rows; ++i) proj += std::conj(out(i, k)) * out(i, j);
      for (std::size_t i = 0; i < rows; ++i) out(i, j) -= proj * out(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(out(i, j));
    nrm = std::sqrt(nrm);
    if (!(nrm > minNorm * std::max(original, 1e-300))) return false;
    for (std::size_t i = 0; i < rows; ++i) out(i, j) /= nrm;
  }
  return true;
}

ComplexMatrix randomUnitary(std::size_t d, Rng& rng) {
  if (d == 0) throw InvalidArgument("randomUnitary: dimension must be positive");
  ComplexMatrix q;
  while (!orthonormalizeColumns(ginibre(d, d, rng), q)) {
  }
  // A second pass removes the residual non-orthogonality of a single
  // modified Gram-Schmidt sweep.
  ComplexMatrix refined;
  orthonormalizeColumns(q, refined);
  return refined;
}

ComplexMatrix randomUnitary(std::size_t d, std::uint64_t seed) {
  Rng rng = makeRng(seed);
  return randomUnitary(d, rng);
}

DensityMatrix randomDensityMatrix(std::size_t dimA, std::size_t dimB, std::size_t rank,
                                  Rng& rng) {
  const std::size_t n = dimA * dimB;
  if (rank < 1 || rank > n) throw InvalidArgument("randomDensityMatrix: rank out of range");
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  const double tr = m.trace().real();
  m *= 1.0 / tr;
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
  }
  return DensityMatrix(std::move(m), dimA, dimB);
}

DensityMatrix randomDensityMatrix(std::size_t dimA, std::size_t dimB, std::size_t rank,
                                  std::uint64_t seed) {
  Rng rng = makeRng(seed);
  return randomDensityMatrix(dimA, dimB, rank, rng);
}

std::vector<Complex> randomPureVector(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, 1, rng);
  std::vector<Complex> v = g.column(0);
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

Povm randomRankOnePovm(std::size_t d, std::size_t outcomes, Rng& rng) {
  if (d == 0 || outcomes < d)
    throw InvalidArgument("randomRankOnePovm: need outcomes >= d >= 1");
  ComplexMatrix iso;
  while (!orthonormalizeColumns(ginibre(outcomes, d, rng), iso)) {
  }
  ComplexMatrix refined;
  orthonormalizeColumns(iso, refined);
  std::vector<std::vector<Complex>> kets(outcomes, std::vector<Complex>(d));
  for (std::size_t s = 0; s < outcomes; ++s)
    for (std::size_t k = 0; k < d; ++k) kets[s][k] = std::conj(refined(s, k));
  return Povm::fromRankOne(std::move(kets));
}

}  // namespace qcorr
