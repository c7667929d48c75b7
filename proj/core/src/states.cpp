#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qcorr/eigen.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

namespace {

DensityMatrix hermitianized(ComplexMatrix m, std::size_t da, std::size_t db) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return DensityMatrix(std::move(m), da, db);
}

}  // namespace

std::array<double, 4> twoQubitEigenvalues(const TwoQubitParams& params) {
  const auto& r = params.r;
  return {(1.0 - r[0] - r[1] - r[2]) / 4.0, (1.0 - r[0] + r[1] + r[2]) / 4.0,
          (1.0 + r[0] - r[1] + r[2]) / 4.0, (1.0 + r[0] + r[1] - r[2]) / 4.0};
}

DensityMatrix twoQubitState(const TwoQubitParams& params) {
  for (double x : params.r)
    if (!(std::abs(x) <= 1.0)) throw InvalidState("two-qubit state: |r_j| must be <= 1");
  for (double l : twoQubitEigenvalues(params))
    if (l < -1e-12) throw InvalidState("two-qubit state: parameters give a negative eigenvalue");
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (int j = 1; j <= 3; ++j) m += tensorProduct(pauli(j), pauli(j)) * Complex(params.r[j - 1]);
  m *= 0.25;
  return hermitianized(std::move(m), 2, 2);
}

DensityMatrix twoQubitStateFromCorrelation(const std::array<double, 9>& w) {
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      m += tensorProduct(pauli(j), pauli(k)) * Complex(w[(j - 1) * 3 + (k - 1)]);
  m *= 0.25;
  try {
    return hermitianized(std::move(m), 2, 2);
  } catch (const InvalidState& e) {
    throw InvalidState(std::string("two-qubit correlation matrix: ") + e.what());
  }
}

TwoQubitParams signedSingularValues(const std::array<double, 9>& w) {
  ComplexMatrix wtw(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += w[k * 3 + i] * w[k * 3 + j];
      wtw(i, j) = s;
    }
  auto values = hermitianEigenvalues(wtw);
  std::sort(values.begin(), values.end(), std::greater<>());
  const double det = w[0] * (w[4] * w[8] - w[5] * w[7]) - w[1] * (w[3] * w[8] - w[5] * w[6]) +
                     w[2] * (w[3] * w[7] - w[4] * w[6]);
  TwoQubitParams p;
  for (int j = 0; j < 3; ++j) p.r[j] = std::sqrt(std::max(values[j], 0.0));
  if (det < 0.0) p.r[2] = -p.r[2];
  return p;
}

FamilyAnalytics twoQubitAnalytics(const TwoQubitParams& params) {
  const auto lambda = twoQubitEigenvalues(params);
  for (double l : lambda)
    if (l < -1e-12) throw InvalidState("two-qubit analytics: parameters give a negative eigenvalue");
  std::array<double, 4> clamped{};
  std::transform(lambda.begin(), lambda.end(), clamped.begin(),
                 [](double l) { return std::max(l, 0.0); });
  double rm = 0.0;
  for (double x : params.r) rm = std::max(rm, std::abs(x));
  FamilyAnalytics a;
  a.smut = std::max(2.0 - shannonEntropy(clamped), 0.0);
  a.ipMax = std::max(1.0 - binaryEntropyOfBias(rm), 0.0);
  a.qP = std::max(a.smut - a.ipMax, 0.0);
  return a;
}

ComplexMatrix swapOperator(std::size_t d) {
  ComplexMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i * d + j, j * d + i) = 1.0;
  return p;
}

DensityMatrix wernerState(const WernerParams& params) {
  if (params.d < 2) throw InvalidArgument("Werner state: d must be >= 2");
  if (!(params.alpha >= -1.0 && params.alpha <= 1.0))
    throw InvalidState("Werner state: alpha must lie in [-1, 1] for a positive state");
  const double d = static_cast<double>(params.d);
  ComplexMatrix m = ComplexMatrix::identity(params.d * params.d) - swapOperator(params.d) *
                                                                       Complex(params.alpha);
  m *= 1.0 / (d * d - d * params.alpha);
  return DensityMatrix(std::move(m), params.d, params.d);
}

FamilyAnalytics wernerAnalytics(const WernerParams& params) {
  if (params.d < 2) throw InvalidArgument("Werner analytics: d must be >= 2");
  const double a = params.alpha;
  if (!(a >= -1.0 && a <= 1.0)) throw InvalidState("Werner analytics: alpha outside [-1, 1]");
  const double d = static_cast<double>(params.d);
  // x log2(y) with the 0 log 0 = 0 convention for x = 0.
  auto xlog = [](double x, double y) { return x == 0.0 ? 0.0 : x * std::log2(y); };
  FamilyAnalytics out;
  out.smut = 2.0 * std::log2(d) +
             xlog((1.0 + a) * (d - 1.0) / (2.0 * (d - a)), (1.0 + a) / (d * (d - a))) +
             xlog((1.0 - a) * (d + 1.0) / (2.0 * (d - a)), (1.0 - a) / (d * (d - a)));
  out.ipMax = std::log2(d / (d - a)) + xlog((1.0 - a) / (d - a), 1.0 - a);
  // Both are nonnegative; rounding at alpha = 0 would otherwise leave -1e-16.
  out.smut = std::max(out.smut, 0.0);
  out.ipMax = std::max(out.ipMax, 0.0);
  out.qP = std::max(out.smut - out.ipMax, 0.0);
  return out;
}

LockingParams LockingParams::fourier(std::size_t d) {
  return LockingParams{d, ProjectiveBasis::fourier(d).unitary()};
}

namespace {

void checkUnbiased(const LockingParams& params) {
  if (params.d < 2) throw InvalidArgument("locking state: d must be >= 2");
  if (params.u1.rows() != params.d || !isUnitary(params.u1, 1e-9))
    throw InvalidArgument("locking state: U1 must be a d x d unitary");
  const double target = 1.0 / static_cast<double>(params.d);
  for (const auto& z : params.u1.entries())
    if (std::abs(std::norm(z) - target) > 1e-9)
      throw InvalidArgument("locking state: U1 basis is not unbiased to the computational basis");
}

DensityMatrix lockingMixture(std::size_t d, const std::array<ComplexMatrix, 2>& bob) {
  const std::size_t dimA = 2 * d;
  ComplexMatrix m(dimA * d, dimA * d);
  const double w = 1.0 / (2.0 * static_cast<double>(d));
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t a = t * d + i;
      const auto v = bob[t].column(i);
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t b2 = 0; b2 < d; ++b2) m(a * d + b, a * d + b2) += w * v[b] * std::conj(v[b2]);
    }
  return hermitianized(std::move(m), dimA, d);
}

ComplexMatrix shiftUnitary(std::size_t d) {
  ComplexMatrix x(d, d);
  for (std::size_t i = 0; i < d; ++i) x((i + 1) % d, i) = 1.0;
  return x;
}

LockingReport runLockingDemo(const DensityMatrix& rho, std::size_t d,
                             const std::array<ProjectiveBasis, 2>& bob,
                             const OptimizerConfig& cfg) {
  LockingReport r;
  r.d = d;
  r.smut = quantumMutualInfo(rho);
  r.iMaxNoComm = maximizeMIProjective(rho, cfg).value;
  r.iWithComm = classicalMutualInfo(lockingProtocolDistribution(rho, d, bob));
  r.commCost = 1.0;
  r.iAfterOneBit = r.iWithComm - r.commCost;
  r.unlockGain = r.iWithComm - r.commCost - r.iMaxNoComm;
  return r;
}

}  // namespace

DensityMatrix lockingState(const LockingParams& params) {
  checkUnbiased(params);
  return lockingMixture(params.d, {ComplexMatrix::identity(params.d), params.u1});
}

DensityMatrix sigmaLockingState(std::size_t d) {
  if (d < 2) throw InvalidArgument("sigma locking state: d must be >= 2");
  return lockingMixture(d, {ComplexMatrix::identity(d), shiftUnitary(d)});
}

JointDistribution lockingProtocolDistribution(const DensityMatrix& rho, std::size_t d,
                                              const std::array<ProjectiveBasis, 2>& bobBasis) {
  if (rho.dimA() != 2 * d || rho.dimB() != d)
    throw DimensionMismatch("locking protocol: state must be (2d) x d");
  const std::size_t n = 2 * d;
  std::vector<double> table(n * n, 0.0);
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Complex> ea(n, 0.0);
      ea[t * d + i] = 1.0;
      for (std::size_t s = 0; s < d; ++s) {
        const auto w = tensorProduct(std::span<const Complex>(ea),
                                     std::span<const Complex>(bobBasis[t].vector(s)));
        table[(t * d + i) * n + (t * d + s)] = expectation(rho.matrix(), w).real();
      }
    }
  return JointDistribution(n, n, std::move(table));
}

LockingReport lockingDemo(const LockingParams& params, const OptimizerConfig& cfg) {
  const DensityMatrix rho = lockingState(params);
  return runLockingDemo(rho, params.d,
                        {ProjectiveBasis::computational(params.d), ProjectiveBasis(params.u1)},
                        cfg);
}

LockingReport sigmaLockingDemo(std::size_t d, const OptimizerConfig& cfg) {
  const DensityMatrix rho = sigmaLockingState(d);
  // |i + t> stays in the computational basis for both values of t.
  return runLockingDemo(rho, d,
                        {ProjectiveBasis::computational(d), ProjectiveBasis::computational(d)},
                        cfg);
}

DensityMatrix cqState(std::span<const double> probs, const ProjectiveBasis& basisA,
                      std::span<const DensityMatrix> condStates) {
  const ProbVector p(std::vector<double>(probs.begin(), probs.end()));
  if (probs.size() != condStates.size() || probs.size() != basisA.dim())
    throw DimensionMismatch("cqState: need one conditional state per basis vector of A");
  const std::size_t db = condStates.front().dim();
  for (const auto& s : condStates)
    if (s.dim() != db) throw DimensionMismatch("cqState: conditional states differ in dimension");
  const std::size_t da = basisA.dim();
  ComplexMatrix m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    if (p[i] == 0.0) continue;
    m += tensorProduct(ComplexMatrix::projector(basisA.vector(i)), condStates[i].matrix()) *
         Complex(p[i]);
  }
  return hermitianized(std::move(m), da, db);
}

DensityMatrix cqState(std::span<const double> probs, std::span<const DensityMatrix> condStates) {
  return cqState(probs, ProjectiveBasis::computational(probs.size()), condStates);
}

double trineAngle(std::size_t i) { return 2.0 * std::numbers::pi * static_cast<double>(i) / 3.0; }

DensityMatrix trineState() {
  std::vector<DensityMatrix> cond;
  for (std::size_t i = 0; i < 3; ++i) {
    const double half = 0.5 * trineAngle(i);
    const std::vector<Complex> phi{std::cos(half), std::sin(half)};
    cond.push_back(DensityMatrix::pure(phi, 2, 1));
  }
  const std::vector<double> p(3, 1.0 / 3.0);
  return cqState(p, cond);
}

DensityMatrix biorthogonalState(std::span<const double> pMatrix, const ProjectiveBasis& basisA,
                                const ProjectiveBasis& basisB) {
  const std::size_t da = basisA.dim();
  const std::size_t db = basisB.dim();
  if (pMatrix.size() != da * db)
    throw DimensionMismatch("biorthogonalState: probability table must be dA x dB");
  const ProbVector p(std::vector<double>(pMatrix.begin(), pMatrix.end()));
  ComplexMatrix m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const double w = p[i * db + j];
      if (w == 0.0) continue;
      m += tensorProduct(ComplexMatrix::projector(basisA.vector(i)),
                         ComplexMatrix::projector(basisB.vector(j))) *
           Complex(w);
    }
  return hermitianized(std::move(m), da, db);
}

TrineGridOptimum trineProjectiveGrid(std::size_t perAxis) {
  if (perAxis < 2) throw InvalidArgument("trineProjectiveGrid: need at least 2 points per axis");
  const DensityMatrix rho = trineState();
  const ProjectiveBasis alice = ProjectiveBasis::computational(3);
  TrineGridOptimum best{-1.0, 0.0, 0.0};
  for (std::size_t a = 0; a < perAxis; ++a) {
    const double theta = std::numbers::pi * static_cast<double>(a) / static_cast<double>(perAxis - 1);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (std::size_t b = 0; b < perAxis; ++b) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(perAxis);
      const Complex e = std::polar(1.0, phi);
      ProjectiveBasis bob(ComplexMatrix::fromRows({{c, s}, {e * s, -e * c}}));
      const double v = mutualInfoForBases(rho, alice, bob);
      if (v > best.value) best = {v, theta, phi};
    }
  }
  return best;
}

}  // namespace qcorr
