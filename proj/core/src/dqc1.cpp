#include "qcorr/dqc1.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrapPhase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

std::size_t log2Exact(std::size_t m) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < m) ++n;
  if ((std::size_t{1} << n) != m)
    throw InvalidArgument("DQC1 model: phase count must be a power of two");
  return n;
}

double averageConditionalEntropy(const Dqc1Model& model, double phi) {
  double sum = 0.0;
  for (double theta : model.phases) sum += binaryEntropyOfBias(model.alpha * std::cos(theta - phi));
  return sum / static_cast<double>(model.phases.size());
}

}  // namespace

std::string toString(PhaseModel m) {
  switch (m) {
    case PhaseModel::Uniform: return "uniform";
    case PhaseModel::Haar: return "haar";
    case PhaseModel::FromUnitary: return "from-unitary";
    case PhaseModel::Explicit: return "explicit";
  }
  return "explicit";
}

PhaseModel parsePhaseModel(const std::string& name) {
  if (name == "uniform") return PhaseModel::Uniform;
  if (name == "haar") return PhaseModel::Haar;
  throw InvalidArgument("unknown phase model '" + name + "' (expected uniform or haar)");
}

Dqc1Model Dqc1Model::uniform(std::size_t n, double alpha) {
  Dqc1Model m;
  m.n = n;
  m.alpha = alpha;
  m.source = PhaseModel::Uniform;
  const std::size_t dim = std::size_t{1} << n;
  m.phases.resize(dim);
  for (std::size_t s = 0; s < dim; ++s)
    m.phases[s] = kTwoPi * static_cast<double>(s) / static_cast<double>(dim);
  m.validate();
  return m;
}

Dqc1Model Dqc1Model::haar(std::size_t n, double alpha, std::uint64_t seed) {
  if (n > kMaxHaarQubits)
    throw UnsupportedDimension("Haar DQC1 model: n = " + std::to_string(n) + " exceeds " +
                               std::to_string(kMaxHaarQubits));
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Rng rng = makeRng(seed, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      g(r, c) = Complex(re, normal(rng));
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(q, false);
  std::vector<double> phases(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k)
    phases[static_cast<std::size_t>(k)] = wrapPhase(std::arg(solver.eigenvalues()(k)));
  std::sort(phases.begin(), phases.end());

  Dqc1Model m = fromPhases(std::move(phases), alpha);
  m.source = PhaseModel::Haar;
  m.seed = seed;
  return m;
}

std::vector<double> unitaryEigenphases(const ComplexMatrix& u) {
  if (!u.isSquare() || !isUnitary(u, 1e-9))
    throw InvalidArgument("unitaryEigenphases: matrix is not unitary");
  const auto dim = static_cast<Eigen::Index>(u.rows());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = u(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<double> phases(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k)
    phases[static_cast<std::size_t>(k)] = wrapPhase(std::arg(solver.eigenvalues()(k)));
  std::sort(phases.begin(), phases.end());
  return phases;
}

Dqc1Model Dqc1Model::fromUnitary(const ComplexMatrix& u, double alpha) {
  Dqc1Model m = fromPhases(unitaryEigenphases(u), alpha);
  m.source = PhaseModel::FromUnitary;
  return m;
}

Dqc1Model Dqc1Model::fromPhases(std::vector<double> phases, double alpha) {
  Dqc1Model m;
  m.n = log2Exact(phases.size());
  m.alpha = alpha;
  for (double& t : phases) t = wrapPhase(t);
  m.phases = std::move(phases);
  m.source = PhaseModel::Explicit;
  m.validate();
  return m;
}

void Dqc1Model::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidArgument("DQC1 model: alpha must lie in [0, 1]");
  if (n >= 8 * sizeof(std::size_t) || phases.size() != (std::size_t{1} << n))
    throw InvalidArgument("DQC1 model: need exactly 2^n phases");
  for (double t : phases)
    if (!(t >= 0.0 && t < kTwoPi)) throw InvalidArgument("DQC1 model: phase outside [0, 2 pi)");
}

Dqc1Model Dqc1Model::withAlpha(double a) const {
  Dqc1Model m = *this;
  m.alpha = a;
  m.validate();
  return m;
}

Complex normalizedTrace(const Dqc1Model& model) {
  Complex sum = 0.0;
  for (double t : model.phases) sum += std::polar(1.0, t);
  return sum / static_cast<double>(model.phases.size());
}

Complex dqc1Beta(const Dqc1Model& model) { return model.alpha * normalizedTrace(model); }

DensityMatrix buildExplicitState(const Dqc1Model& model) {
  model.validate();
  if (model.n > kMaxExplicitQubits)
    throw UnsupportedDimension("buildExplicitState: n = " + std::to_string(model.n) +
                               " exceeds " + std::to_string(kMaxExplicitQubits));
  const std::size_t dimB = model.dimTarget();
  ComplexMatrix u(dimB, dimB);
  for (std::size_t i = 0; i < dimB; ++i) u(i, i) = std::polar(1.0, model.phases[i]);
  const ComplexMatrix idB = ComplexMatrix::identity(dimB);
  const ComplexMatrix e00 = ComplexMatrix::fromRows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix e11 = ComplexMatrix::fromRows({{0.0, 0.0}, {0.0, 1.0}});
  const ComplexMatrix e01 = ComplexMatrix::fromRows({{0.0, 1.0}, {0.0, 0.0}});
  const ComplexMatrix e10 = ComplexMatrix::fromRows({{0.0, 0.0}, {1.0, 0.0}});
  ComplexMatrix m = tensorProduct(e00, idB) + tensorProduct(e11, idB) +
                    tensorProduct(e01, u.adjoint()) * Complex(model.alpha) +
                    tensorProduct(e10, u) * Complex(model.alpha);
  m *= 1.0 / static_cast<double>(2 * dimB);
  return DensityMatrix(std::move(m), 2, dimB);
}

DensityMatrix blockSumState(const Dqc1Model& model) {
  model.validate();
  if (model.n > kMaxExplicitQubits)
    throw UnsupportedDimension("blockSumState: n exceeds the explicit-state limit");
  const std::size_t dimB = model.dimTarget();
  ComplexMatrix m(2 * dimB, 2 * dimB);
  for (std::size_t i = 0; i < dimB; ++i) {
    const Complex e = std::polar(model.alpha, model.phases[i]);
    const ComplexMatrix block = ComplexMatrix::fromRows({{1.0, std::conj(e)}, {e, 1.0}});
    ComplexMatrix proj(dimB, dimB);
    proj(i, i) = 1.0;
    m += tensorProduct(block, proj);
  }
  m *= 1.0 / static_cast<double>(2 * dimB);
  return DensityMatrix(std::move(m), 2, dimB);
}

TraceEstimate traceEstimate(const Dqc1Model& model, std::size_t shots, std::uint64_t seed) {
  model.validate();
  if (shots == 0) throw InvalidArgument("traceEstimate: shots must be >= 1");
  if (model.alpha == 0.0) throw InvalidArgument("traceEstimate: undefined for alpha = 0");
  const Complex beta = dqc1Beta(model);
  const auto count = static_cast<long long>(shots);
  TraceEstimate out;
  out.shots = shots;
  double variance = 0.0;
  double means[2] = {0.0, 0.0};
  const double expected[2] = {beta.real(), beta.imag()};
  for (int k = 0; k < 2; ++k) {
    // Each shot is +1 with probability (1 + <sigma_k>)/2.
    Rng rng = makeRng(seed, static_cast<std::uint64_t>(k));
    const double pPlus = std::clamp(0.5 * (1.0 + expected[k]), 0.0, 1.0);
    std::binomial_distribution<long long> plus(count, pPlus);
    const long long np = plus(rng);
    const double mean = static_cast<double>(2 * np - count) / static_cast<double>(count);
    means[k] = mean;
    // Outcomes are +-1, so the sample variance is (1 - mean^2) n / (n - 1).
    const double sampleVar = shots > 1 ? (1.0 - mean * mean) * static_cast<double>(shots) /
                                             static_cast<double>(shots - 1)
                                       : 1.0;
    variance += sampleVar / static_cast<double>(shots);
  }
  out.estimate = Complex(means[0], means[1]) / model.alpha;
  out.standardError = std::sqrt(variance) / model.alpha;
  return out;
}

double dqc1Smut(const Dqc1Model& model) {
  const double b = std::min(std::abs(dqc1Beta(model)), model.alpha);
  return std::max(0.0, binaryEntropyOfBias(b) - binaryEntropyOfBias(model.alpha));
}

double dqc1SmutTypical(double alpha) { return 1.0 - binaryEntropyOfBias(alpha); }

double dqc1InformationAt(const Dqc1Model& model, double phi) {
  double m = 0.0;
  for (double theta : model.phases) m += std::cos(theta - phi);
  m *= model.alpha / static_cast<double>(model.phases.size());
  return std::max(0.0, binaryEntropyOfBias(std::clamp(m, -1.0, 1.0)) -
                           averageConditionalEntropy(model, phi));
}

double dqc1InformationApprox(const Dqc1Model& model, double phi) {
  return 1.0 - averageConditionalEntropy(model, phi);
}

Dqc1Information dqc1IpMax(const Dqc1Model& model, std::size_t phiGrid) {
  model.validate();
  if (phiGrid < 3) throw InvalidArgument("dqc1IpMax: phi grid needs at least 3 points");
  Dqc1Information best{-1.0, 0.0};
  const double step = kTwoPi / static_cast<double>(phiGrid);
  for (std::size_t k = 0; k < phiGrid; ++k) {
    const double phi = step * static_cast<double>(k);
    const double v = dqc1InformationAt(model, phi);
    if (v > best.value) best = {v, phi};
  }
  // Golden-section search on [phi - step, phi + step].
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best.phi - step;
  double hi = best.phi + step;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = dqc1InformationAt(model, x1);
  double f2 = dqc1InformationAt(model, x2);
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = dqc1InformationAt(model, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = dqc1InformationAt(model, x2);
    }
  }
  const double phi = 0.5 * (lo + hi);
  const double v = dqc1InformationAt(model, phi);
  if (v > best.value) best = {v, wrapPhase(phi)};
  return best;
}

BasisPair dqc1Bases(const Dqc1Model& model, double phi) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex e = std::polar(s, phi);
  ComplexMatrix a = ComplexMatrix::fromRows({{s, s}, {e, -e}});
  return BasisPair{ProjectiveBasis(std::move(a)), ProjectiveBasis::computational(model.dimTarget())};
}

double dqc1Q(const Dqc1Model& model, std::size_t phiGrid) {
  return std::max(0.0, dqc1Smut(model) - dqc1IpMax(model, phiGrid).value);
}

double dqc1QTypical(std::size_t n, double alpha) {
  const Dqc1Model m = Dqc1Model::uniform(n, alpha);
  return averageConditionalEntropy(m, 0.0) - binaryEntropyOfBias(alpha);
}

std::vector<Dqc1ScanRow> dqc1Scan(std::size_t n, std::size_t alphaSteps, PhaseModel model,
                                  std::uint64_t seed) {
  if (alphaSteps < 2) throw InvalidArgument("dqc1Scan: alphaSteps must be >= 2");
  Dqc1Model base;
  switch (model) {
    case PhaseModel::Uniform: base = Dqc1Model::uniform(n, 0.0); break;
    case PhaseModel::Haar: base = Dqc1Model::haar(n, 0.0, seed); break;
    default: throw InvalidArgument("dqc1Scan: phase model must be uniform or haar");
  }
  std::vector<Dqc1ScanRow> rows;
  rows.reserve(alphaSteps);
  for (std::size_t k = 0; k < alphaSteps; ++k) {
    const double alpha = static_cast<double>(k) / static_cast<double>(alphaSteps - 1);
    const Dqc1Model m = base.withAlpha(alpha);
    Dqc1ScanRow row;
    row.alpha = alpha;
    row.smut = dqc1Smut(m);
    row.ipMax = dqc1IpMax(m).value;
    row.q = std::max(0.0, row.smut - row.ipMax);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qcorr
