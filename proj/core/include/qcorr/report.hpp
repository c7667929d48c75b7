#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qcorr/density.hpp"
#include "qcorr/optimizer.hpp"

namespace qcorr {

/// Every scalar measure of one state, in bits.
///
/// ipMax, cAp and cBp are heuristic lower bounds; qP, jAp and jBp are the
/// corresponding upper estimates. The identities qP = smut - ipMax,
/// jAp = smut - cAp and midD = smut - iE hold exactly by construction.
struct CorrelationReport {
  std::size_t dimA = 0;
  std::size_t dimB = 0;

  double sA = 0.0;
  double sB = 0.0;
  double sAB = 0.0;
  double smut = 0.0;

  double iE = 0.0;
  bool eigenbasisDegenerateA = false;
  bool eigenbasisDegenerateB = false;
  double midD = 0.0;

  double ipMax = 0.0;
  double qP = 0.0;

  double cAp = 0.0;
  double jAp = 0.0;
  std::optional<double> cBp;
  std::optional<double> jBp;

  std::optional<double> iPovm;
  std::size_t povmOutcomesA = 0;
  std::size_t povmOutcomesB = 0;

  // Optimizer metadata for the I^p_max search.
  std::size_t restarts = 0;
  std::size_t starts = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::string method;
  bool heuristicLowerBounds = true;
};

struct ReportOptions {
  bool includeDiscordB = true;
  /// Outcome counts for the optional POVM-level search; 0 on both skips it.
  std::size_t povmOutcomesA = 0;
  std::size_t povmOutcomesB = 0;
};

/// Assemble every measure. The projective search is warm-started with the
/// marginal eigenbases, and C_A^p / C_B^p with the optimal local bases it
/// finds, so iE <= ipMax <= min(cAp, cBp) holds for the reported numbers.
CorrelationReport fullReport(const DensityMatrix& rho, const OptimizerConfig& cfg,
                             const ReportOptions& options = {});

/// Flat JSON object; bit-valued fields are doubles.
std::string toJson(const CorrelationReport& report, int indent = 2);

}  // namespace qcorr
