#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qcorr/eigen.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kInitialStep = 0.4;
constexpr std::size_t kGridPointsPerAxis = 25;

using Vectors = std::vector<std::vector<Complex>>;

Vectors columnsOf(const ComplexMatrix& u) {
  Vectors v(u.cols());
  for (std::size_t k = 0; k < u.cols(); ++k) v[k] = u.column(k);
  return v;
}

// <K_s| rows of an isometry -> vectors |K_s>.
Vectors rowsAsKets(const ComplexMatrix& iso) {
  Vectors v(iso.rows(), std::vector<Complex>(iso.cols()));
  for (std::size_t s = 0; s < iso.rows(); ++s)
    for (std::size_t k = 0; k < iso.cols(); ++k) v[s][k] = std::conj(iso(s, k));
  return v;
}

void checkOptimizerDims(const DensityMatrix& rho) {
  if (rho.dimA() > kMaxOptimizerDim || rho.dimB() > kMaxOptimizerDim)
    throw UnsupportedDimension("measurement optimizers support local dimensions up to " +
                               std::to_string(kMaxOptimizerDim));
}

std::vector<double> randomAngles(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

// One local search according to the configured method. `x0` is used by
// simplex and annealing; grid search covers the whole box itself.
LocalResult runLocal(const Objective& f, std::vector<double> x0, const OptimizerConfig& cfg,
                     Rng& rng) {
  switch (cfg.method) {
    case SearchMethod::Simplex:
      return polishedNelderMead(f, std::move(x0), kInitialStep, cfg.maxIters, cfg.tolerance);
    case SearchMethod::Annealing: {
      LocalResult coarse = anneal(f, std::move(x0), kInitialStep, cfg.maxIters, rng);
      LocalResult fine =
          polishedNelderMead(f, coarse.x, 0.1 * kInitialStep, cfg.maxIters, cfg.tolerance);
      fine.evaluations += coarse.evaluations;
      return fine.value <= coarse.value ? fine : coarse;
    }
    case SearchMethod::Grid:
      return gridSearch(f, x0.size(), -std::numbers::pi, std::numbers::pi, kGridPointsPerAxis,
                        cfg.maxIters, cfg.tolerance);
  }
  throw InvalidArgument("unknown search method");
}

}  // namespace

double quantumMutualInfo(const DensityMatrix& rho) {
  const double sa = vonNeumannEntropy(partialTrace(rho, Subsystem::A));
  const double sb = vonNeumannEntropy(partialTrace(rho, Subsystem::B));
  const double sab = vonNeumannEntropy(rho);
  return sa + sb - sab;
}

ProjectiveOptimum maximizeMIProjective(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                       std::span<const BasisPair> seeds) {
  cfg.validate();
  checkOptimizerDims(rho);
  const std::size_t da = rho.dimA();
  const std::size_t db = rho.dimB();
  const std::size_t na = unitaryParameterCount(da);
  const std::size_t nb = unitaryParameterCount(db);

  std::vector<BasisPair> frames(seeds.begin(), seeds.end());
  frames.push_back({ProjectiveBasis::computational(da), ProjectiveBasis::computational(db)});
  const std::size_t seeded = seeds.size();
  const std::size_t starts = seeded + cfg.restarts;
  if (cfg.method == SearchMethod::Grid && na + nb > 4)
    throw InvalidArgument("grid search supports at most 4 parameters (two qubits)");

  double bestValue = -1.0;
  std::size_t bestStart = 0;
  std::size_t totalEvals = 0;
  LocalResult bestLocal;
  std::size_t bestFrame = 0;

  for (std::size_t start = 0; start < starts; ++start) {
    Rng rng = makeRng(cfg.seed, start);
    const std::size_t frameIdx = start < seeded ? start : seeded;
    const BasisPair& frame = frames[frameIdx];
    const ComplexMatrix& ua0 = frame.a.unitary();
    const ComplexMatrix& ub0 = frame.b.unitary();
    const Objective f = [&](std::span<const double> x) {
      const ComplexMatrix ua = ua0 * unitaryFromParameters(da, x.subspan(0, na));
      const ComplexMatrix ub = ub0 * unitaryFromParameters(db, x.subspan(na, nb));
      return -classicalMutualInfo(jointDistributionRankOne(rho, columnsOf(ua), columnsOf(ub)));
    };
    std::vector<double> x0(na + nb, 0.0);
    const bool randomStart = start > seeded;
    if (randomStart) x0 = randomAngles(na + nb, rng);
    if (cfg.method == SearchMethod::Grid && start > seeded) break;

    LocalResult local = runLocal(f, x0, cfg, rng);
    totalEvals += local.evaluations;
    const double value = -local.value;
    if (value > bestValue) {
      bestValue = value;
      bestStart = start;
      bestLocal = std::move(local);
      bestFrame = frameIdx;
    }
  }

  const BasisPair& frame = frames[bestFrame];
  std::span<const double> x(bestLocal.x);
  ComplexMatrix ua = frame.a.unitary() * unitaryFromParameters(da, x.subspan(0, na));
  ComplexMatrix ub = frame.b.unitary() * unitaryFromParameters(db, x.subspan(na, nb));
  // Report the value attained by the returned bases exactly.
  ProjectiveBasis basisA(ua);
  ProjectiveBasis basisB(ub);
  const double attained = mutualInfoForBases(rho, basisA, basisB);
  return ProjectiveOptimum{
      attained, std::move(basisA), std::move(basisB),
      OptimizerMetadata{starts, totalEvals, bestStart, bestLocal.converged, bestLocal.x}};
}

PovmOptimum maximizeMIPovm(const DensityMatrix& rho, std::size_t nOutA, std::size_t nOutB,
                           const OptimizerConfig& cfg, std::span<const BasisPair> seeds) {
  cfg.validate();
  checkOptimizerDims(rho);
  const std::size_t da = rho.dimA();
  const std::size_t db = rho.dimB();
  if (nOutA < da || nOutB < db)
    throw InvalidArgument("maximizeMIPovm: a rank-one POVM needs at least d outcomes per side");

  const ProjectiveOptimum proj = maximizeMIProjective(rho, cfg, seeds);

  const std::size_t pa = 2 * nOutA * da;
  const std::size_t pb = 2 * nOutB * db;
  ComplexMatrix isoA;
  ComplexMatrix isoB;
  const Objective f = [&](std::span<const double> x) {
    if (!isometryFromParameters(nOutA, da, x.subspan(0, pa), isoA) ||
        !isometryFromParameters(nOutB, db, x.subspan(pa, pb), isoB))
      return std::numeric_limits<double>::max();
    return -classicalMutualInfo(jointDistributionRankOne(rho, rowsAsKets(isoA), rowsAsKets(isoB)));
  };

  auto seedParams = [&](const BasisPair& pair) {
    std::vector<double> x = isometryParametersFromRows(nOutA, pair.a.unitary().adjoint());
    const std::vector<double> xb = isometryParametersFromRows(nOutB, pair.b.unitary().adjoint());
    x.insert(x.end(), xb.begin(), xb.end());
    return x;
  };

  std::vector<std::vector<double>> seededStarts;
  seededStarts.push_back(seedParams({proj.basisA, proj.basisB}));
  for (const auto& s : seeds) seededStarts.push_back(seedParams(s));

  const std::size_t starts = seededStarts.size() + cfg.restarts;
  double bestValue = -1.0;
  std::vector<double> bestX;
  std::size_t bestStart = 0;
  std::size_t totalEvals = proj.meta.evaluations;
  bool bestConverged = false;
  // Random isometry starts are stretched to a step comparable with the
  // entry scale of a normalized parameter matrix.
  const double step = 0.3;

  for (std::size_t start = 0; start < starts; ++start) {
    Rng rng = makeRng(cfg.seed ^ 0xA5A5A5A5ULL, start);
    std::vector<double> x0;
    if (start < seededStarts.size()) {
      x0 = seededStarts[start];
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      ComplexMatrix probe;
      do {
        x0.assign(pa + pb, 0.0);
        for (auto& v : x0) v = gauss(rng);
      } while (!isometryFromParameters(nOutA, da, std::span<const double>(x0).subspan(0, pa),
                                       probe) ||
               !isometryFromParameters(nOutB, db, std::span<const double>(x0).subspan(pa, pb),
                                       probe));
    }
    LocalResult local;
    if (cfg.method == SearchMethod::Annealing) {
      LocalResult coarse = anneal(f, x0, step, cfg.maxIters, rng);
      local = polishedNelderMead(f, coarse.x, 0.1 * step, cfg.maxIters, cfg.tolerance);
      local.evaluations += coarse.evaluations;
    } else {
      local = polishedNelderMead(f, x0, step, cfg.maxIters, cfg.tolerance);
    }
    totalEvals += local.evaluations;
    if (-local.value > bestValue) {
      bestValue = -local.value;
      bestX = local.x;
      bestStart = start;
      bestConverged = local.converged;
    }
  }

  std::span<const double> x(bestX);
  isometryFromParameters(nOutA, da, x.subspan(0, pa), isoA);
  isometryFromParameters(nOutB, db, x.subspan(pa, pb), isoB);
  Povm povmA = Povm::fromRankOne(rowsAsKets(isoA));
  Povm povmB = Povm::fromRankOne(rowsAsKets(isoB));
  double attained = classicalMutualInfo(jointDistribution(rho, povmA, povmB));
  if (attained < proj.value) {
    // Never report less than the projective optimum it was seeded with.
    return PovmOptimum{proj.value, proj.basisA.toPovm(), proj.basisB.toPovm(),
                       OptimizerMetadata{starts, totalEvals, 0, proj.meta.converged,
                                         seededStarts.front()}};
  }
  return PovmOptimum{attained, std::move(povmA), std::move(povmB),
                     OptimizerMetadata{starts, totalEvals, bestStart, bestConverged, bestX}};
}

ClassicalCorrelation classicalCorrelationA(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                           bool projectiveOnly,
                                           std::span<const ProjectiveBasis> seedBases,
                                           std::size_t povmOutcomes) {
  cfg.validate();
  checkOptimizerDims(rho);
  const std::size_t da = rho.dimA();
  const std::size_t nOut = povmOutcomes == 0 ? da * da : povmOutcomes;
  if (!projectiveOnly && nOut < da)
    throw InvalidArgument("classicalCorrelationA: POVM needs at least dA outcomes");

  std::vector<ProjectiveBasis> frames(seedBases.begin(), seedBases.end());
  frames.push_back(ProjectiveBasis::computational(da));
  const std::size_t seeded = seedBases.size();
  const std::size_t starts = seeded + cfg.restarts;

  const std::size_t np = projectiveOnly ? unitaryParameterCount(da) : 2 * nOut * da;
  const double step = projectiveOnly ? kInitialStep : 0.3;

  double bestValue = -std::numeric_limits<double>::infinity();
  std::vector<double> bestX;
  std::size_t bestStart = 0;
  std::size_t bestFrame = 0;
  std::size_t totalEvals = 0;
  bool bestConverged = false;

  for (std::size_t start = 0; start < starts; ++start) {
    Rng rng = makeRng(cfg.seed ^ 0x5EEDC0DEULL, start);
    const std::size_t frameIdx = start < seeded ? start : seeded;
    const ComplexMatrix& u0 = frames[frameIdx].unitary();
    ComplexMatrix iso;
    const Objective f = [&](std::span<const double> x) -> double {
      if (projectiveOnly) {
        const ProjectiveBasis basis(u0 * unitaryFromParameters(da, x));
        return -holevoQuantityB(rho, basis.toPovm());
      }
      if (!isometryFromParameters(nOut, da, x, iso)) return std::numeric_limits<double>::max();
      // Rotate the frame: rows <K_s| U0^dagger realize the seed at the origin.
      const ComplexMatrix rotated = iso * u0.adjoint();
      return -holevoQuantityB(rho, Povm::fromRankOne(rowsAsKets(rotated)));
    };

    std::vector<double> x0;
    if (projectiveOnly) {
      x0.assign(np, 0.0);
      if (start > seeded) x0 = randomAngles(np, rng);
    } else if (start <= seeded) {
      x0 = isometryParametersFromRows(nOut, ComplexMatrix::identity(da));
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      ComplexMatrix probe;
      do {
        x0.assign(np, 0.0);
        for (auto& v : x0) v = gauss(rng);
      } while (!isometryFromParameters(nOut, da, x0, probe));
    }
    if (cfg.method == SearchMethod::Grid && np > 4)
      throw InvalidArgument("grid search supports at most 4 parameters");
    LocalResult local = (projectiveOnly && cfg.method != SearchMethod::Simplex)
                            ? runLocal(f, x0, cfg, rng)
                            : polishedNelderMead(f, x0, step, cfg.maxIters, cfg.tolerance);
    totalEvals += local.evaluations;
    if (-local.value > bestValue) {
      bestValue = -local.value;
      bestX = local.x;
      bestStart = start;
      bestFrame = frameIdx;
      bestConverged = local.converged;
    }
    if (cfg.method == SearchMethod::Grid && start >= seeded) break;
  }

  const ComplexMatrix& u0 = frames[bestFrame].unitary();
  Povm measurement = Povm::trivial(da);
  if (projectiveOnly) {
    measurement = ProjectiveBasis(u0 * unitaryFromParameters(da, bestX)).toPovm();
  } else {
    ComplexMatrix iso;
    isometryFromParameters(nOut, da, bestX, iso);
    measurement = Povm::fromRankOne(rowsAsKets(iso * u0.adjoint()));
  }
  const double value = holevoQuantityB(rho, measurement);
  return ClassicalCorrelation{
      value, std::move(measurement),
      OptimizerMetadata{starts, totalEvals, bestStart, bestConverged, std::move(bestX)}};
}

ClassicalCorrelation classicalCorrelationB(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                           bool projectiveOnly,
                                           std::span<const ProjectiveBasis> seedBases,
                                           std::size_t povmOutcomes) {
  return classicalCorrelationA(swapSubsystems(rho), cfg, projectiveOnly, seedBases, povmOutcomes);
}

double discordA(const DensityMatrix& rho, const OptimizerConfig& cfg, bool projectiveOnly) {
  const double j = quantumMutualInfo(rho) - classicalCorrelationA(rho, cfg, projectiveOnly).value;
  return std::max(j, 0.0);
}

double discordB(const DensityMatrix& rho, const OptimizerConfig& cfg, bool projectiveOnly) {
  const double j = quantumMutualInfo(rho) - classicalCorrelationB(rho, cfg, projectiveOnly).value;
  return std::max(j, 0.0);
}

ProjectiveBasis eigenbasis(const ComplexMatrix& m) {
  return ProjectiveBasis(hermitianEigen(m, 1e-9).vectors);
}

namespace {

bool hasDegeneracy(const std::vector<double>& values) {
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] - values[k - 1] < kDegeneracyGap) return true;
  return false;
}

// Groups of indices of (ascending) eigenvalues closer than kDegeneracyGap.
std::vector<std::vector<std::size_t>> degenerateBlocks(const std::vector<double>& values) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k] - values[k - 1] >= kDegeneracyGap) blocks.emplace_back();
    blocks.back().push_back(k);
  }
  return blocks;
}

ComplexMatrix mixWithinBlocks(const HermitianEigen& eig, Rng& rng) {
  ComplexMatrix out = eig.vectors;
  for (const auto& block : degenerateBlocks(eig.values)) {
    if (block.size() < 2) continue;
    const ComplexMatrix w = randomUnitary(block.size(), rng);
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t j = 0; j < block.size(); ++j) {
        Complex s = 0.0;
        for (std::size_t i = 0; i < block.size(); ++i) s += eig.vectors(r, block[i]) * w(i, j);
        out(r, block[j]) = s;
      }
  }
  return out;
}

}  // namespace

EigenbasisInfo iEigenbasis(const DensityMatrix& rho) {
  const auto eigA = hermitianEigen(partialTrace(rho, Subsystem::A).matrix(), 1e-9);
  const auto eigB = hermitianEigen(partialTrace(rho, Subsystem::B).matrix(), 1e-9);
  ProjectiveBasis basisA(eigA.vectors);
  ProjectiveBasis basisB(eigB.vectors);
  const double value = mutualInfoForBases(rho, basisA, basisB);
  return EigenbasisInfo{value, hasDegeneracy(eigA.values), hasDegeneracy(eigB.values),
                        std::move(basisA), std::move(basisB)};
}

EigenbasisScan iEigenbasisScan(const DensityMatrix& rho, std::size_t samples,
                               std::uint64_t seed) {
  const auto eigA = hermitianEigen(partialTrace(rho, Subsystem::A).matrix(), 1e-9);
  const auto eigB = hermitianEigen(partialTrace(rho, Subsystem::B).matrix(), 1e-9);
  const double canonical =
      mutualInfoForBases(rho, ProjectiveBasis(eigA.vectors), ProjectiveBasis(eigB.vectors));
  EigenbasisScan scan{canonical, canonical, canonical, samples};
  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng = makeRng(seed, k);
    const ProjectiveBasis a(mixWithinBlocks(eigA, rng));
    const ProjectiveBasis b(mixWithinBlocks(eigB, rng));
    const double v = mutualInfoForBases(rho, a, b);
    scan.minimum = std::min(scan.minimum, v);
    scan.maximum = std::max(scan.maximum, v);
  }
  return scan;
}

double measurementInducedDisturbance(const DensityMatrix& rho) {
  return std::max(quantumMutualInfo(rho) - iEigenbasis(rho).value, 0.0);
}

}  // namespace qcorr
