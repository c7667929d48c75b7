#include "qcorr/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qcorr/eigen.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kDropProbability = 1e-12;

// Tr_A[(M (x) I) rho] as an unnormalized dB x dB operator.
ComplexMatrix reduceBWithEffect(const ComplexMatrix& rho, std::size_t da, std::size_t db,
                                const ComplexMatrix& m) {
  ComplexMatrix out(db, db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t a2 = 0; a2 < da; ++a2) {
      const Complex w = m(a, a2);
      if (w == Complex{}) continue;
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t b2 = 0; b2 < db; ++b2) out(b, b2) += w * rho(a2 * db + b, a * db + b2);
    }
  return out;
}

ComplexMatrix reduceAWithEffect(const ComplexMatrix& rho, std::size_t da, std::size_t db,
                                const ComplexMatrix& m) {
  ComplexMatrix out(da, da);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t b2 = 0; b2 < db; ++b2) {
      const Complex w = m(b, b2);
      if (w == Complex{}) continue;
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t a2 = 0; a2 < da; ++a2) out(a, a2) += w * rho(a * db + b2, a2 * db + b);
    }
  return out;
}

DensityMatrix normalizedConditional(ComplexMatrix sigma, double p) {
  const std::size_t n = sigma.rows();
  for (std::size_t i = 0; i < n; ++i) {
    sigma(i, i) = sigma(i, i).real() / p;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (sigma(i, j) + std::conj(sigma(j, i))) / p;
      sigma(i, j) = z;
      sigma(j, i) = std::conj(z);
    }
  }
  try {
    return DensityMatrix::single(sigma);
  } catch (const InvalidState&) {
    // Low-probability outcomes amplify rounding; project back onto states.
    auto eig = hermitianEigen(sigma, 1e-8);
    double total = 0.0;
    for (auto& v : eig.values) total += (v = std::max(v, 0.0));
    ComplexMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (eig.values[k] == 0.0) continue;
      const auto col = eig.vectors.column(k);
      rebuilt += ComplexMatrix::projector(col) * Complex(eig.values[k] / total);
    }
    return DensityMatrix::single(rebuilt);
  }
}

double effectTrace(const ComplexMatrix& effect, const ComplexMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < effect.rows(); ++i)
    for (std::size_t j = 0; j < effect.cols(); ++j) s += (effect(i, j) * rho(j, i)).real();
  return s;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(ComplexMatrix unitary) : unitary_(std::move(unitary)) {
  if (!unitary_.isSquare() || unitary_.rows() == 0)
    throw InvalidArgument("ProjectiveBasis: basis matrix must be square and non-empty");
  if (!isUnitary(unitary_, 1e-9))
    throw InvalidArgument("ProjectiveBasis: vectors are not orthonormal (tolerance 1e-9)");
}

ProjectiveBasis ProjectiveBasis::computational(std::size_t d) {
  return ProjectiveBasis(ComplexMatrix::identity(d));
}

ProjectiveBasis ProjectiveBasis::fourier(std::size_t d) {
  ComplexMatrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % d) /
                           static_cast<double>(d);
      f(j, k) = std::polar(scale, angle);
    }
  return ProjectiveBasis(std::move(f));
}

Povm ProjectiveBasis::toPovm() const {
  std::vector<std::vector<Complex>> vecs;
  vecs.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) vecs.push_back(vector(k));
  return Povm::fromRankOne(std::move(vecs));
}

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw InvalidArgument("Povm: no effects");
  dim_ = effects_.front().rows();
  ComplexMatrix total(dim_, dim_);
  for (const auto& e : effects_) {
    if (!e.isSquare() || e.rows() != dim_) throw InvalidArgument("Povm: effect dimensions differ");
    if (!isHermitian(e, 1e-10)) throw InvalidArgument("Povm: effect is not Hermitian");
    if (hermitianEigenvalues(e).front() < -1e-10)
      throw InvalidArgument("Povm: effect is not positive semidefinite");
    total += e;
  }
  if (maxAbsDiff(total, ComplexMatrix::identity(dim_)) > 1e-9)
    throw InvalidArgument("Povm: effects do not sum to the identity (tolerance 1e-9)");
}

Povm Povm::fromRankOne(std::vector<std::vector<Complex>> vectors) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(vectors.size());
  for (const auto& v : vectors) effects.push_back(ComplexMatrix::projector(v));
  Povm p(std::move(effects));
  p.rankOne_ = std::move(vectors);
  return p;
}

Povm Povm::fromIsometryRows(const ComplexMatrix& isometry) {
  std::vector<std::vector<Complex>> vecs(isometry.rows());
  for (std::size_t s = 0; s < isometry.rows(); ++s) {
    vecs[s].resize(isometry.cols());
    for (std::size_t k = 0; k < isometry.cols(); ++k) vecs[s][k] = std::conj(isometry(s, k));
  }
  return fromRankOne(std::move(vecs));
}

Povm Povm::trivial(std::size_t d) { return Povm({ComplexMatrix::identity(d)}); }

JointDistribution::JointDistribution(std::size_t rowsA, std::size_t colsB,
                                     std::vector<double> table)
    : rows_(rowsA), cols_(colsB), table_(std::move(table)) {
  if (table_.size() != rows_ * cols_) throw DimensionMismatch("JointDistribution: table size");
  double total = 0.0;
  for (auto& p : table_) {
    if (!std::isfinite(p) || p < -kDropProbability)
      throw InvalidArgument("JointDistribution: negative or non-finite entry");
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("JointDistribution: table does not sum to 1");
}

std::vector<double> JointDistribution::marginalA() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t s = 0; s < cols_; ++s) m[i] += (*this)(i, s);
  return m;
}

std::vector<double> JointDistribution::marginalB() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t s = 0; s < cols_; ++s) m[s] += (*this)(i, s);
  return m;
}

JointDistribution JointDistribution::binned(std::span<const std::size_t> groupA,
                                            std::span<const std::size_t> groupB) const {
  if (groupA.size() != rows_ || groupB.size() != cols_)
    throw DimensionMismatch("binned: group labels must cover every outcome");
  const std::size_t ra = *std::max_element(groupA.begin(), groupA.end()) + 1;
  const std::size_t rb = *std::max_element(groupB.begin(), groupB.end()) + 1;
  std::vector<double> t(ra * rb, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t s = 0; s < cols_; ++s) t[groupA[i] * rb + groupB[s]] += (*this)(i, s);
  return JointDistribution(ra, rb, std::move(t));
}

JointDistribution jointDistribution(const DensityMatrix& rho, const Povm& measA,
                                    const Povm& measB) {
  if (measA.dim() != rho.dimA() || measB.dim() != rho.dimB())
    throw DimensionMismatch("jointDistribution: measurement dimensions do not match the state");
  const std::size_t na = measA.outcomes();
  const std::size_t nb = measB.outcomes();
  std::vector<double> table(na * nb);
  for (std::size_t s = 0; s < nb; ++s) {
    // sigma_s = Tr_B[(I (x) M_s) rho]; p_is = Tr(M_i sigma_s).
    const ComplexMatrix sigma =
        reduceAWithEffect(rho.matrix(), rho.dimA(), rho.dimB(), measB.effect(s));
    for (std::size_t i = 0; i < na; ++i) table[i * nb + s] = effectTrace(measA.effect(i), sigma);
  }
  return JointDistribution(na, nb, std::move(table));
}

JointDistribution jointDistributionRankOne(const DensityMatrix& rho,
                                           const std::vector<std::vector<Complex>>& vecsA,
                                           const std::vector<std::vector<Complex>>& vecsB) {
  const std::size_t da = rho.dimA();
  const std::size_t db = rho.dimB();
  const auto& m = rho.matrix();
  const std::size_t n = da * db;
  std::vector<double> table(vecsA.size() * vecsB.size());
  std::vector<Complex> w(n);
  std::vector<Complex> mw(n);
  for (std::size_t i = 0; i < vecsA.size(); ++i) {
    for (std::size_t s = 0; s < vecsB.size(); ++s) {
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < db; ++b) w[a * db + b] = vecsA[i][a] * vecsB[s][b];
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < n; ++c) row += m(r, c) * w[c];
        acc += (std::conj(w[r]) * row).real();
      }
      table[i * vecsB.size() + s] = acc;
    }
  }
  return JointDistribution(vecsA.size(), vecsB.size(), std::move(table));
}

double classicalMutualInfo(const JointDistribution& jd) {
  const double value =
      shannonEntropy(jd.marginalA()) + shannonEntropy(jd.marginalB()) - shannonEntropy(jd.table());
  return value < 0.0 ? 0.0 : value;
}

double mutualInfoForBases(const DensityMatrix& rho, const ProjectiveBasis& basisA,
                          const ProjectiveBasis& basisB) {
  std::vector<std::vector<Complex>> va(basisA.dim());
  std::vector<std::vector<Complex>> vb(basisB.dim());
  for (std::size_t k = 0; k < basisA.dim(); ++k) va[k] = basisA.vector(k);
  for (std::size_t k = 0; k < basisB.dim(); ++k) vb[k] = basisB.vector(k);
  if (basisA.dim() != rho.dimA() || basisB.dim() != rho.dimB())
    throw DimensionMismatch("mutualInfoForBases: basis dimensions do not match the state");
  return classicalMutualInfo(jointDistributionRankOne(rho, va, vb));
}

std::vector<ConditionalState> conditionalStatesB(const DensityMatrix& rho, const Povm& measA) {
  if (measA.dim() != rho.dimA())
    throw DimensionMismatch("conditionalStatesB: measurement dimension does not match dimA");
  std::vector<ConditionalState> out;
  for (const auto& effect : measA.effects()) {
    ComplexMatrix sigma = reduceBWithEffect(rho.matrix(), rho.dimA(), rho.dimB(), effect);
    const double p = sigma.trace().real();
    if (p < kDropProbability) continue;
    out.push_back({p, normalizedConditional(std::move(sigma), p)});
  }
  return out;
}

std::vector<ConditionalState> conditionalStatesA(const DensityMatrix& rho, const Povm& measB) {
  if (measB.dim() != rho.dimB())
    throw DimensionMismatch("conditionalStatesA: measurement dimension does not match dimB");
  std::vector<ConditionalState> out;
  for (const auto& effect : measB.effects()) {
    ComplexMatrix sigma = reduceAWithEffect(rho.matrix(), rho.dimA(), rho.dimB(), effect);
    const double p = sigma.trace().real();
    if (p < kDropProbability) continue;
    out.push_back({p, normalizedConditional(std::move(sigma), p)});
  }
  return out;
}

double holevoQuantityB(const DensityMatrix& rho, const Povm& measA) {
  const double sb = vonNeumannEntropy(partialTrace(rho, Subsystem::B));
  double avg = 0.0;
  for (const auto& effect : measA.effects()) {
    const ComplexMatrix sigma = reduceBWithEffect(rho.matrix(), rho.dimA(), rho.dimB(), effect);
    const double p = sigma.trace().real();
    if (p < kDropProbability) continue;
    // p S(sigma / p) = -sum lambda log lambda + p log p.
    double h = 0.0;
    for (double v : clampedSpectrum(sigma))
      if (v > 0.0) h -= v * std::log2(v);
    avg += h + p * std::log2(p);
  }
  return sb - avg;
}

}  // namespace qcorr
