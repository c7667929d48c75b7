#include "qcorr/entropy.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qcorr/eigen.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

namespace {
constexpr double kProbabilityFloor = 1e-12;
}

ProbVector::ProbVector(std::vector<double> probs, bool normalized) : probs_(std::move(probs)) {
  for (auto& p : probs_) {
    if (!std::isfinite(p) || p < -kProbabilityFloor)
      throw InvalidArgument("ProbVector: entry is negative or not finite");
    if (p < 0.0) p = 0.0;
    if (p > 1.0 + 1e-9) throw InvalidArgument("ProbVector: entry exceeds one");
  }
  if (normalized) {
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
      std::ostringstream os;
      os.precision(17);
      os << "ProbVector: entries sum to " << total;
      throw InvalidArgument(os.str());
    }
  }
}

double shannonEntropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > kProbabilityFloor) h -= x * std::log2(x);
  return h;
}

double binaryEntropyOfBias(double x) {
  const double p[2] = {0.5 * (1.0 + x), 0.5 * (1.0 - x)};
  return shannonEntropy(p);
}

std::vector<double> clampedSpectrum(const ComplexMatrix& rho) {
  auto values = hermitianEigenvalues(rho, 1e-9);
  for (auto& v : values) {
    if (v < -1e-10) {
      std::ostringstream os;
      os.precision(17);
      os << "entropy of a matrix with negative eigenvalue " << v;
      throw InvalidState(os.str());
    }
    if (v < 0.0) v = 0.0;
  }
  return values;
}

double vonNeumannEntropy(const ComplexMatrix& rho) {
  const auto values = clampedSpectrum(rho);
  double h = 0.0;
  for (double v : values)
    if (v > 0.0) h -= v * std::log2(v);
  return h < 0.0 ? 0.0 : h;
}

double vonNeumannEntropy(const DensityMatrix& rho) { return vonNeumannEntropy(rho.matrix()); }

double purity(const ComplexMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& z : rho.entries()) s += std::norm(z);
  return s;
}

double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

}  // namespace qcorr
