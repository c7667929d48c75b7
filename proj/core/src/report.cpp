#include "qcorr/report.hpp"

#include <json.hpp>

#include "qcorr/entropy.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

CorrelationReport fullReport(const DensityMatrix& rho, const OptimizerConfig& cfg,
                             const ReportOptions& options) {
  cfg.validate();
  CorrelationReport r;
  r.dimA = rho.dimA();
  r.dimB = rho.dimB();
  r.sA = vonNeumannEntropy(partialTrace(rho, Subsystem::A));
  r.sB = vonNeumannEntropy(partialTrace(rho, Subsystem::B));
  r.sAB = vonNeumannEntropy(rho);
  r.smut = r.sA + r.sB - r.sAB;

  const EigenbasisInfo eig = iEigenbasis(rho);
  r.iE = eig.value;
  r.eigenbasisDegenerateA = eig.degenerateA;
  r.eigenbasisDegenerateB = eig.degenerateB;
  r.midD = r.smut - r.iE;

  const BasisPair eigenSeed{eig.basisA, eig.basisB};
  const ProjectiveOptimum proj = maximizeMIProjective(rho, cfg, std::span(&eigenSeed, 1));
  r.ipMax = proj.value;
  r.qP = r.smut - r.ipMax;

  const ClassicalCorrelation ca = classicalCorrelationA(rho, cfg, true, std::span(&proj.basisA, 1));
  r.cAp = ca.value;
  r.jAp = r.smut - r.cAp;
  if (options.includeDiscordB) {
    const ClassicalCorrelation cb =
        classicalCorrelationB(rho, cfg, true, std::span(&proj.basisB, 1));
    r.cBp = cb.value;
    r.jBp = r.smut - cb.value;
  }

  if (options.povmOutcomesA > 0 || options.povmOutcomesB > 0) {
    const std::size_t na = std::max(options.povmOutcomesA, rho.dimA());
    const std::size_t nb = std::max(options.povmOutcomesB, rho.dimB());
    const BasisPair seed{proj.basisA, proj.basisB};
    r.iPovm = maximizeMIPovm(rho, na, nb, cfg, std::span(&seed, 1)).value;
    r.povmOutcomesA = na;
    r.povmOutcomesB = nb;
  }

  r.restarts = cfg.restarts;
  r.starts = proj.meta.starts;
  r.evaluations = proj.meta.evaluations;
  r.converged = proj.meta.converged;
  r.seed = cfg.seed;
  r.method = toString(cfg.method);
  return r;
}

std::string toJson(const CorrelationReport& r, int indent) {
  nlohmann::ordered_json j;
  j["dim_a"] = r.dimA;
  j["dim_b"] = r.dimB;
  j["s_a"] = r.sA;
  j["s_b"] = r.sB;
  j["s_ab"] = r.sAB;
  j["smut"] = r.smut;
  j["i_e"] = r.iE;
  j["i_e_degenerate_a"] = r.eigenbasisDegenerateA;
  j["i_e_degenerate_b"] = r.eigenbasisDegenerateB;
  j["mid_d"] = r.midD;
  j["ip_max"] = r.ipMax;
  j["q_p"] = r.qP;
  j["c_a_p"] = r.cAp;
  j["j_a_p"] = r.jAp;
  if (r.cBp) j["c_b_p"] = *r.cBp;
  if (r.jBp) j["j_b_p"] = *r.jBp;
  if (r.iPovm) {
    j["i_povm"] = *r.iPovm;
    j["povm_outcomes_a"] = r.povmOutcomesA;
    j["povm_outcomes_b"] = r.povmOutcomesB;
  }
  j["heuristic_lower_bounds"] = r.heuristicLowerBounds;
  j["optimizer_method"] = r.method;
  j["optimizer_restarts"] = r.restarts;
  j["optimizer_starts"] = r.starts;
  j["optimizer_evaluations"] = r.evaluations;
  j["optimizer_converged"] = r.converged;
  j["seed"] = r.seed;
  return j.dump(indent);
}

}  // namespace qcorr
