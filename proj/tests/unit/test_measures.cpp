#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

OptimizerConfig quick(std::size_t restarts = 8) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  return cfg;
}

DensityMatrix singlet() { return twoQubitState({{-1.0, -1.0, -1.0}}); }

}  // namespace

TEST(ClassicalInfo, PerfectCorrelationIsOneBit) {
  const JointDistribution jd(2, 2, {0.5, 0.0, 0.0, 0.5});
  EXPECT_NEAR(classicalMutualInfo(jd), 1.0, 1e-15);
  const JointDistribution product(2, 3, {0.1, 0.2, 0.2, 0.1, 0.2, 0.2});
  EXPECT_NEAR(classicalMutualInfo(product), 0.0, 1e-15);
}

TEST(ClassicalInfo, RankOnePathMatchesEffectPath) {
  Rng rng = makeRng(31);
  for (int t = 0; t < 20; ++t) {
    const auto rho = randomDensityMatrix(2, 3, 4, rng);
    const Povm a = randomRankOnePovm(2, 4, rng);
    const Povm b = randomRankOnePovm(3, 5, rng);
    const double viaEffects = classicalMutualInfo(jointDistribution(rho, a, b));
    const double viaVectors =
        classicalMutualInfo(jointDistributionRankOne(rho, *a.rankOneVectors(), *b.rankOneVectors()));
    EXPECT_NEAR(viaEffects, viaVectors, 1e-12);
  }
}

// I{A:B} <= min{S(rho_A), S(rho_B), S(A:B)} for any local measurements.
TEST(Properties, MeasuredInformationBoundedByQuantumQuantities) {
  std::size_t violations = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    Rng rng = makeRng(2024, k);
    const std::size_t da = 2 + k % 2;
    const std::size_t db = 2 + (k / 2) % 2;
    const auto rho = randomDensityMatrix(da, db, 1 + k % (da * db), rng);
    const Povm a = randomRankOnePovm(da, da + k % (10 - da), rng);
    const Povm b = randomRankOnePovm(db, db + (k / 3) % (10 - db), rng);
    const double info = classicalMutualInfo(jointDistribution(rho, a, b));
    const double bound = std::min({vonNeumannEntropy(partialTrace(rho, Subsystem::A)),
                                   vonNeumannEntropy(partialTrace(rho, Subsystem::B)),
                                   quantumMutualInfo(rho)});
    if (info > bound + 1e-9) ++violations;
  }
  EXPECT_EQ(violations, 0u);
}

TEST(Properties, BinningNeverIncreasesInformation) {
  Rng rng = makeRng(77);
  for (int t = 0; t < 50; ++t) {
    const auto rho = randomDensityMatrix(3, 3, 9, rng);
    const auto jd = jointDistribution(rho, randomRankOnePovm(3, 5, rng), randomRankOnePovm(3, 4, rng));
    const std::vector<std::size_t> ga{0, 1, 1, 0, 2};
    const std::vector<std::size_t> gb{0, 0, 1, 1};
    EXPECT_LE(classicalMutualInfo(jd.binned(ga, gb)), classicalMutualInfo(jd) + 1e-12);
  }
}

TEST(Properties, MutualInformationIsSymmetric) {
  const auto rho = randomDensityMatrix(2, 3, 6, std::uint64_t{4});
  EXPECT_NEAR(quantumMutualInfo(rho), quantumMutualInfo(swapSubsystems(rho)), 1e-12);
}

TEST(Projective, TwoQubitClosedFormUnderLocalUnitaries) {
  Rng rng = makeRng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 8; ++t) {
    TwoQubitParams p;
    std::array<double, 4> ev{};
    do {
      for (auto& x : p.r) x = u(rng);
      ev = twoQubitEigenvalues(p);
    } while (*std::min_element(ev.begin(), ev.end()) < 0.0);
    const auto rho = applyLocalUnitaries(twoQubitState(p), randomUnitary(2, rng), randomUnitary(2, rng));
    const auto opt = maximizeMIProjective(rho, quick());
    EXPECT_NEAR(opt.value, twoQubitAnalytics(p).ipMax, 1e-4);
    // The reported bases attain the reported value.
    EXPECT_NEAR(mutualInfoForBases(rho, opt.basisA, opt.basisB), opt.value, 1e-12);
  }
}

TEST(Projective, DeterministicForFixedSeed) {
  const auto rho = randomDensityMatrix(3, 2, 6, std::uint64_t{12});
  const auto a = maximizeMIProjective(rho, quick(6));
  const auto b = maximizeMIProjective(rho, quick(6));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.meta.bestParameters, b.meta.bestParameters);
}

TEST(Projective, AllSearchMethodsAgreeOnQubits) {
  const TwoQubitParams p{{0.2, -0.6, 0.3}};
  const auto rho = twoQubitState(p);
  for (auto m : {SearchMethod::Simplex, SearchMethod::Annealing, SearchMethod::Grid}) {
    OptimizerConfig cfg = quick(4);
    cfg.method = m;
    EXPECT_NEAR(maximizeMIProjective(rho, cfg).value, twoQubitAnalytics(p).ipMax, 1e-4)
        << toString(m);
  }
}

TEST(Projective, RejectsOversizedDimensions) {
  EXPECT_THROW(maximizeMIProjective(DensityMatrix::maximallyMixed(17, 1), quick()),
               UnsupportedDimension);
}

TEST(Povm, NeverBelowProjective) {
  Rng rng = makeRng(9);
  for (int t = 0; t < 4; ++t) {
    const auto rho = randomDensityMatrix(2, 2, 3, rng);
    const auto cfg = quick(4);
    const auto proj = maximizeMIProjective(rho, cfg);
    const auto povm = maximizeMIPovm(rho, 3, 3, cfg);
    EXPECT_GE(povm.value, proj.value - 1e-12);
    EXPECT_NEAR(classicalMutualInfo(jointDistribution(rho, povm.povmA, povm.povmB)), povm.value,
                1e-12);
  }
  EXPECT_THROW(maximizeMIPovm(DensityMatrix::maximallyMixed(3, 2), 2, 2, quick()), InvalidArgument);
}

TEST(Discord, ClassicalQuantumStatesHaveNoDiscordOnTheClassicalSide) {
  Rng rng = makeRng(41);
  for (int t = 0; t < 5; ++t) {
    std::vector<DensityMatrix> cond;
    for (int i = 0; i < 3; ++i) cond.push_back(randomDensityMatrix(2, 1, 1 + i % 2, rng));
    const std::vector<double> p{0.2, 0.5, 0.3};
    const auto rho = cqState(p, ProjectiveBasis(randomUnitary(3, rng)), cond);
    EXPECT_LT(discordA(rho, quick(), true), 1e-6);
  }
}

TEST(Report, SingletValues) {
  const auto r = fullReport(singlet(), quick(4));
  EXPECT_NEAR(r.smut, 2.0, 1e-12);
  EXPECT_NEAR(r.ipMax, 1.0, 1e-9);
  EXPECT_NEAR(r.qP, 1.0, 1e-9);
  EXPECT_NEAR(r.jAp, 1.0, 1e-9);
  EXPECT_TRUE(r.eigenbasisDegenerateA);
  EXPECT_TRUE(r.eigenbasisDegenerateB);
  EXPECT_TRUE(r.heuristicLowerBounds);
}

TEST(Report, OrderingAndIdentities) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto rho = randomDensityMatrix(2 + seed % 2, 2, 4, seed);
    const auto r = fullReport(rho, quick(4));
    EXPECT_LE(r.iE, r.ipMax + 1e-12);
    EXPECT_LE(r.ipMax, r.cAp + 1e-12);
    ASSERT_TRUE(r.cBp.has_value());
    EXPECT_LE(r.ipMax, *r.cBp + 1e-12);
    EXPECT_GE(r.qP, r.jAp - 1e-12);
    EXPECT_GE(r.midD, r.qP - 1e-12);
    EXPECT_DOUBLE_EQ(r.qP, r.smut - r.ipMax);
    EXPECT_DOUBLE_EQ(r.midD, r.smut - r.iE);
    EXPECT_FALSE(r.eigenbasisDegenerateA);
  }
}

TEST(Report, JsonHasStableKeys) {
  const std::string json = toJson(fullReport(singlet(), quick(2)));
  for (const char* key : {"\"smut\"", "\"ip_max\"", "\"q_p\"", "\"j_a_p\"", "\"mid_d\"", "\"i_e\"",
                          "\"seed\"", "\"heuristic_lower_bounds\""})
    EXPECT_NE(json.find(key), std::string::npos) << key;
}

TEST(Eigenbasis, ScanBracketsCanonicalChoice) {
  const auto rho = lockingState(LockingParams::fourier(2));
  const auto scan = iEigenbasisScan(rho, 50, 3);
  EXPECT_LE(scan.minimum, scan.canonical + 1e-12);
  EXPECT_GE(scan.maximum, scan.canonical - 1e-12);
  EXPECT_EQ(scan.samples, 50u);
}

TEST(Eigenbasis, ProductStateHasNoDisturbance) {
  Rng rng = makeRng(6);
  const auto rho = productState(randomDensityMatrix(2, 1, 2, rng), randomDensityMatrix(3, 1, 3, rng));
  EXPECT_NEAR(measurementInducedDisturbance(rho), 0.0, 1e-10);
  EXPECT_NEAR(quantumMutualInfo(rho), 0.0, 1e-10);
}
