#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcorr/density.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/optimizer.hpp"

namespace qcorr {

/// Largest local dimension accepted by the measurement optimizers.
inline constexpr std::size_t kMaxOptimizerDim = 16;

/// A pair of local bases used to warm-start a projective search.
struct BasisPair {
  ProjectiveBasis a;
  ProjectiveBasis b;
};

struct OptimizerMetadata {
  std::size_t starts = 0;       ///< seeded starts + cfg.restarts
  std::size_t evaluations = 0;  ///< total objective evaluations
  std::size_t bestStart = 0;    ///< index of the winning start
  bool converged = false;       ///< winning local search met its tolerance
  std::vector<double> bestParameters;
};

/// Heuristic I^p_max: the value is attained by the returned bases, so it is a
/// certified lower bound on the projective optimum.
struct ProjectiveOptimum {
  double value = 0.0;
  ProjectiveBasis basisA;
  ProjectiveBasis basisB;
  OptimizerMetadata meta;
};

struct PovmOptimum {
  double value = 0.0;
  Povm povmA;
  Povm povmB;
  OptimizerMetadata meta;
};

struct ClassicalCorrelation {
  double value = 0.0;  ///< lower bound on C_A (or C_A^p)
  Povm measurement;    ///< attaining measurement on the measured side
  OptimizerMetadata meta;
};

/// Maximize the classical mutual information over local projective
/// measurements. Starts are: every seed pair, then cfg.restarts starts of
/// which the first is the computational basis pair and the rest are random
/// points of the unitary chart. Each start owns the RNG stream
/// deriveSeed(cfg.seed, start), so the result depends only on
/// (rho, cfg, seeds). Throws UnsupportedDimension above kMaxOptimizerDim.
ProjectiveOptimum maximizeMIProjective(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                       std::span<const BasisPair> seeds = {});

/// Maximize over rank-one POVMs with nOutA / nOutB outcomes, parameterized as
/// isometries whose rows are the vectors <K_s|. The projective optimum (and
/// any seeds) are included as starts, so the result is never below it.
/// Throws InvalidArgument when nOut < local dimension.
PovmOptimum maximizeMIPovm(const DensityMatrix& rho, std::size_t nOutA, std::size_t nOutB,
                           const OptimizerConfig& cfg, std::span<const BasisPair> seeds = {});

/// C_A = max over measurements on A of S(rho_B) - sum_i p_i S(rho_i^B).
/// With projectiveOnly this is C_A^p. Otherwise rank-one POVMs with
/// `povmOutcomes` elements are searched (0 selects dA^2). `seedBases` are
/// extra starts on A.
ClassicalCorrelation classicalCorrelationA(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                           bool projectiveOnly,
                                           std::span<const ProjectiveBasis> seedBases = {},
                                           std::size_t povmOutcomes = 0);

/// Same quantity with the measurement on B.
ClassicalCorrelation classicalCorrelationB(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                           bool projectiveOnly,
                                           std::span<const ProjectiveBasis> seedBases = {},
                                           std::size_t povmOutcomes = 0);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double quantumMutualInfo(const DensityMatrix& rho);

/// J_A = S(A:B) - C_A clamped at zero. Because C_A is a heuristic lower
/// bound, the result is an upper estimate of the discord.
double discordA(const DensityMatrix& rho, const OptimizerConfig& cfg, bool projectiveOnly);
double discordB(const DensityMatrix& rho, const OptimizerConfig& cfg, bool projectiveOnly);

struct EigenbasisInfo {
  double value = 0.0;  ///< I_e for the canonical eigenbases
  bool degenerateA = false;
  bool degenerateB = false;
  ProjectiveBasis basisA;
  ProjectiveBasis basisB;
};

/// Marginal eigenvalue gap below which an eigenbasis is considered non-unique.
inline constexpr double kDegeneracyGap = 1e-8;

/// Classical mutual information when both sides measure in the canonical
/// eigenbases of their marginals. Degenerate flags signal that other
/// eigenbasis choices exist and may give different values.
EigenbasisInfo iEigenbasis(const DensityMatrix& rho);

struct EigenbasisScan {
  double canonical = 0.0;
  double minimum = 0.0;
  double maximum = 0.0;
  std::size_t samples = 0;
};

/// Sample eigenbasis choices by applying Haar-random unitaries inside every
/// degenerate eigenspace of each marginal and record the range of I_e.
EigenbasisScan iEigenbasisScan(const DensityMatrix& rho, std::size_t samples = 100,
                               std::uint64_t seed = 0);

/// D = S(A:B) - I_e (canonical eigenbases).
double measurementInducedDisturbance(const DensityMatrix& rho);

/// Canonical eigenbasis of a Hermitian single-system operator.
ProjectiveBasis eigenbasis(const ComplexMatrix& m);

}  // namespace qcorr
