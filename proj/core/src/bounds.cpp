#include "qcorr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

bool isPrime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

MubFamily mubFamily(std::size_t d, std::size_t M) {
  if (d != 2 && !(d > 2 && isPrime(d)))
    throw UnsupportedDimension("mubFamily: only d = 2 and odd primes are supported, got d = " +
                               std::to_string(d));
  if (M < 1 || M > d + 1)
    throw InvalidArgument("mubFamily: need 1 <= M <= d + 1");

  MubFamily family;
  family.d = d;
  if (d == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    const std::vector<ComplexMatrix> all{
        ComplexMatrix::identity(2),
        ComplexMatrix::fromRows({{s, s}, {s, -s}}),
        ComplexMatrix::fromRows({{s, s}, {i * s, -i * s}}),
    };
    for (std::size_t m = 0; m < M; ++m) family.bases.emplace_back(all[m]);
    return family;
  }

  family.bases.push_back(ProjectiveBasis::computational(d));
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t m = 0; m + 1 < M; ++m) {
    ComplexMatrix u(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // Exponent reduced mod d before the trig call keeps the basis exact.
        const std::size_t e = (m * k % d * k + j * k) % d;
        u(k, j) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                       static_cast<double>(d));
      }
    family.bases.emplace_back(std::move(u));
  }
  return family;
}

double mubUnbiasednessError(const MubFamily& family) {
  const double target = 1.0 / static_cast<double>(family.d);
  double worst = 0.0;
  for (std::size_t a = 0; a < family.count(); ++a)
    for (std::size_t b = a + 1; b < family.count(); ++b)
      for (std::size_t i = 0; i < family.d; ++i)
        for (std::size_t j = 0; j < family.d; ++j) {
          const double o = std::norm(
              innerProduct(family.bases[a].vector(i), family.bases[b].vector(j)));
          worst = std::max(worst, std::abs(o - target));
        }
  return worst;
}

double prop2Bound(std::size_t dA) {
  if (dA < 2) throw InvalidArgument("prop2Bound: dA must be >= 2");
  return std::log2(static_cast<double>(dA));
}

Prop3Bounds prop3Bounds(std::size_t dA, std::size_t M) {
  if (dA < 2 || M < 2) throw InvalidArgument("prop3Bounds: need dA >= 2 and M >= 2");
  Prop3Bounds out;
  out.K = M * dA / (dA + M - 1);
  const double d = static_cast<double>(dA);
  const double m = static_cast<double>(M);
  const double k = static_cast<double>(out.K);
  out.eq20 = m * std::log2(d / (k + 1.0)) +
             k * ((k + 1.0) * (d + m - 1.0) / d - m) * std::log2(1.0 + 1.0 / k);
  out.half = 0.5 * m * std::log2(d);
  out.eq20Stronger = out.eq20 < out.half;
  return out;
}

bool completeMubSet(std::size_t dA, std::size_t M) noexcept {
  return (dA == 2 && M == 3) || (dA > 2 && isPrime(dA) && M == dA + 1);
}

double prop4Bound(const DensityMatrix& rhoA, std::size_t dA, std::size_t M) {
  if (!completeMubSet(dA, M))
    throw InvalidArgument("prop4Bound: requires dA = 2 with M = 3, or odd prime dA with M = dA + 1");
  if (rhoA.dim() != dA) throw DimensionMismatch("prop4Bound: marginal dimension differs from dA");
  const double p = purity(rhoA);
  if (dA == 2) {
    const double r = std::sqrt(std::max(0.0, (2.0 * p - 1.0) / 3.0));
    return 3.0 * binaryEntropyOfBias(r) - 2.0;
  }
  const double d = static_cast<double>(dA);
  return -(d - 1.0) * (d * p - 1.0) * std::log2(d - 1.0) / (d * (d - 2.0)) +
         corollaryBounds(dA).value;
}

CorollaryBounds corollaryBounds(std::size_t dA) {
  if (dA < 2) throw InvalidArgument("corollaryBounds: dA must be >= 2");
  const double d = static_cast<double>(dA);
  CorollaryBounds out;
  out.value = dA % 2 == 1 ? (d + 1.0) * std::log2(2.0 * d / (d + 1.0))
                          : d + 1.0 + (d / 2.0 + 1.0) * std::log2(d / (d + 2.0));
  out.strictCap = d;
  return out;
}

bool BoundReport::allSatisfied() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.satisfied; });
}

BoundReport iTotal(const DensityMatrix& rho, const MubFamily& mubs, const Povm& bobPovm) {
  if (mubs.d != rho.dimA()) throw DimensionMismatch("iTotal: MUB dimension differs from dimA");
  if (bobPovm.dim() != rho.dimB()) throw DimensionMismatch("iTotal: Bob's POVM does not act on B");
  const std::size_t M = mubs.count();
  const std::size_t dA = mubs.d;

  BoundReport report;
  for (const auto& basis : mubs.bases)
    report.iValues.push_back(classicalMutualInfo(jointDistribution(rho, basis.toPovm(), bobPovm)));
  for (double v : report.iValues) report.iTot += v;
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = a + 1; b < M; ++b)
      report.maxPairSum = std::max(report.maxPairSum, report.iValues[a] + report.iValues[b]);

  auto add = [&](std::string name, double lhs, double bound, bool applicable, bool strict) {
    BoundCheck c{std::move(name), lhs, bound, applicable, true};
    if (applicable) c.satisfied = strict ? lhs < bound : lhs <= bound + kBoundTolerance;
    report.checks.push_back(std::move(c));
  };

  add("prop2", report.maxPairSum, prop2Bound(dA), M >= 2, false);
  if (M >= 2) {
    const auto p3 = prop3Bounds(dA, M);
    add("prop3_eq20", report.iTot, p3.eq20, true, false);
    add("prop3_half", report.iTot, p3.half, true, false);
  } else {
    add("prop3_eq20", report.iTot, 0.0, false, false);
    add("prop3_half", report.iTot, 0.0, false, false);
  }
  const bool complete = completeMubSet(dA, M);
  if (complete) {
    const DensityMatrix rhoA = partialTrace(rho, Subsystem::A);
    const auto cor = corollaryBounds(dA);
    add("prop4", report.iTot, prop4Bound(rhoA, dA, M), true, false);
    add("corollary_odd_even", report.iTot, cor.value, true, false);
    add("corollary_strict", report.iTot, cor.strictCap, true, true);
  } else {
    add("prop4", report.iTot, 0.0, false, false);
    add("corollary_odd_even", report.iTot, 0.0, false, false);
    add("corollary_strict", report.iTot, 0.0, false, true);
  }
  return report;
}

double entropicSum(const DensityMatrix& rhoA, const MubFamily& mubs) {
  if (rhoA.dim() != mubs.d) throw DimensionMismatch("entropicSum: state and MUB dimensions differ");
  double sum = 0.0;
  for (const auto& basis : mubs.bases) {
    std::vector<double> p(mubs.d);
    for (std::size_t i = 0; i < mubs.d; ++i)
      p[i] = std::max(0.0, expectation(rhoA.matrix(), basis.vector(i)).real());
    sum += shannonEntropy(ProbVector(std::move(p)));
  }
  return sum;
}

double entropicLowerBound(std::size_t d, std::size_t M) {
  if (M < 2) return 0.0;
  const auto p3 = prop3Bounds(d, M);
  const double m = static_cast<double>(M);
  const double logd = std::log2(static_cast<double>(d));
  // The conditional-entropy bounds are M log2 d minus the information bounds.
  return std::max(m * logd - p3.eq20, p3.half);
}

}  // namespace qcorr
