#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qcorr/dqc1.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random.hpp"
#include "qcorr/report.hpp"

using namespace qcorr;

TEST(Dqc1Model, Construction) {
  const auto u = Dqc1Model::uniform(3, 0.5);
  EXPECT_EQ(u.phases.size(), 8u);
  EXPECT_NEAR(std::abs(normalizedTrace(u)), 0.0, 1e-15);
  EXPECT_THROW(Dqc1Model::fromPhases({0.0, 1.0, 2.0}, 0.5), InvalidArgument);
  EXPECT_THROW(Dqc1Model::uniform(2, 1.5), InvalidArgument);
  const auto h1 = Dqc1Model::haar(4, 0.3, 7);
  const auto h2 = Dqc1Model::haar(4, 0.3, 7);
  EXPECT_EQ(h1.phases, h2.phases);
  EXPECT_NE(h1.phases, Dqc1Model::haar(4, 0.3, 8).phases);
}

TEST(Dqc1Model, EigenphasesOfKnownUnitary) {
  const auto u = ComplexMatrix::diagonal(std::vector<Complex>{std::polar(1.0, 0.3), std::polar(1.0, -0.2)});
  Rng rng = makeRng(1);
  const auto v = randomUnitary(2, rng);
  const auto m = Dqc1Model::fromUnitary(v * u * v.adjoint(), 1.0);
  EXPECT_NEAR(m.phases[0], 0.3, 1e-12);
  EXPECT_NEAR(m.phases[1], 2.0 * std::numbers::pi - 0.2, 1e-12);
}

TEST(Dqc1State, ExplicitEqualsBlockSum) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto m = Dqc1Model::haar(n, 0.37 + 0.1 * static_cast<double>(n), n);
    EXPECT_LT(maxAbsDiff(buildExplicitState(m).matrix(), blockSumState(m).matrix()), 1e-12);
  }
  EXPECT_THROW(buildExplicitState(Dqc1Model::uniform(7, 0.5)), UnsupportedDimension);
}

TEST(Dqc1State, ZeroPolarizationIsMaximallyMixed) {
  const auto rho = buildExplicitState(Dqc1Model::haar(2, 0.0, 3));
  EXPECT_LT(maxAbsDiff(rho.matrix(), DensityMatrix::maximallyMixed(2, 4).matrix()), 1e-15);
  EXPECT_NEAR(quantumMutualInfo(rho), 0.0, 1e-12);
}

TEST(Dqc1Analytic, SmutMatchesExplicitState) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t s = 0; s < 20; ++s) {
      const double alpha = 0.05 * static_cast<double>(s);
      const auto m = s % 2 ? Dqc1Model::haar(n, alpha, 100 * n + s) : Dqc1Model::uniform(n, alpha);
      EXPECT_NEAR(dqc1Smut(m), quantumMutualInfo(buildExplicitState(m)), 1e-9)
          << "n=" << n << " s=" << s;
    }
}

TEST(Dqc1Analytic, InformationMatchesExplicitMeasurement) {
  const auto m = Dqc1Model::haar(3, 0.8, 5);
  const auto rho = buildExplicitState(m);
  for (double phi : {0.0, 0.7, 2.5}) {
    const auto bases = dqc1Bases(m, phi);
    EXPECT_NEAR(dqc1InformationAt(m, phi), mutualInfoForBases(rho, bases.a, bases.b), 1e-12);
  }
}

TEST(Dqc1Analytic, UniformPhasesLimit) {
  const auto m = Dqc1Model::uniform(5, 0.6);
  EXPECT_NEAR(dqc1Smut(m), 1.0 - binaryEntropyOfBias(0.6), 1e-12);
  EXPECT_NEAR(dqc1Smut(m), dqc1SmutTypical(0.6), 1e-12);
  const auto best = dqc1IpMax(m);
  EXPECT_NEAR(dqc1InformationAt(m, 0.0), best.value, 1e-12);
  EXPECT_NEAR(dqc1Q(m), dqc1QTypical(5, 0.6), 1e-12);
}

TEST(Dqc1Analytic, TrivialCases) {
  const auto zero = Dqc1Model::haar(3, 0.0, 2);
  EXPECT_EQ(dqc1Smut(zero), 0.0);
  EXPECT_NEAR(dqc1IpMax(zero).value, 0.0, 1e-15);
  EXPECT_NEAR(dqc1Q(zero), 0.0, 1e-15);
  const auto identity = Dqc1Model::fromPhases(std::vector<double>(8, 0.0), 0.9);
  EXPECT_NEAR(dqc1Smut(identity), 0.0, 1e-12);
  EXPECT_NEAR(dqc1Q(identity), 0.0, 1e-9);
  const auto equal = Dqc1Model::fromPhases(std::vector<double>(4, 1.3), 0.7);
  EXPECT_NEAR(dqc1Q(equal), 0.0, 1e-9);
}

TEST(Dqc1Analytic, QIsNonnegativeAndPositiveForSpreadPhases) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto m = Dqc1Model::haar(1 + s % 5, 0.1 + 0.04 * static_cast<double>(s), s);
    EXPECT_GE(dqc1Q(m), 0.0);
    EXPECT_GT(dqc1Q(m), 1e-9);
  }
}

TEST(Dqc1Analytic, FrozenTypicalValues) {
  // Direct summations computed independently with numpy.
  EXPECT_NEAR(dqc1QTypical(10, 1.0), 0.5573049558808318, 1e-12);
  EXPECT_NEAR(dqc1QTypical(3, 0.5), 0.09546755695661469, 1e-12);
  EXPECT_NEAR(dqc1QTypical(10, 0.5), 0.09546876302258378, 1e-12);
}

TEST(Dqc1Analytic, GridValueAgreesWithOptimizer) {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto m = Dqc1Model::haar(n, 0.8, 40 + n);
    const auto grid = dqc1IpMax(m);
    const BasisPair seed = dqc1Bases(m, grid.phi);
    const auto opt = maximizeMIProjective(buildExplicitState(m), cfg, std::span<const BasisPair>(&seed, 1));
    EXPECT_LE(grid.value, opt.value + 1e-6);
    EXPECT_NEAR(grid.value, opt.value, 1e-3);
  }
}

TEST(Dqc1Analytic, ExplicitReportForTwoPhases) {
  const auto m = Dqc1Model::fromPhases({0.0, std::numbers::pi}, 1.0);
  OptimizerConfig cfg;
  cfg.restarts = 4;
  const auto r = fullReport(buildExplicitState(m), cfg);
  EXPECT_NEAR(r.smut, dqc1Smut(m), 1e-9);
  EXPECT_NEAR(r.smut, 1.0, 1e-9);
  EXPECT_GE(r.qP, -1e-12);
}

TEST(Dqc1Scan, UniformCurveIsIncreasing) {
  const auto rows = dqc1Scan(10, 100, PhaseModel::Uniform);
  ASSERT_EQ(rows.size(), 100u);
  EXPECT_EQ(rows.front().q, 0.0);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GT(rows[k].q, rows[k - 1].q) << k;
  EXPECT_NEAR(rows.back().q, 0.5573049558808318, 1e-9);
  EXPECT_THROW(dqc1Scan(3, 1, PhaseModel::Uniform), InvalidArgument);
}

TEST(TraceEstimator, IdentityAndUniform) {
  const auto id = Dqc1Model::fromPhases(std::vector<double>(4, 0.0), 1.0);
  const auto e = traceEstimate(id, 100000, 1);
  EXPECT_LT(std::abs(e.estimate - Complex(1.0, 0.0)), 0.02);
  const auto uni = Dqc1Model::uniform(4, 1.0);
  EXPECT_LT(std::abs(traceEstimate(uni, 100000, 2).estimate), 0.02);
  EXPECT_THROW(traceEstimate(Dqc1Model::uniform(2, 0.0), 10, 0), InvalidArgument);
  EXPECT_THROW(traceEstimate(uni, 0, 0), InvalidArgument);
}

TEST(TraceEstimator, HaarWithinThreeStandardErrors) {
  const auto m = Dqc1Model::haar(6, 1.0, 11);
  const Complex exact = normalizedTrace(m);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e = traceEstimate(m, 1000000, seed);
    EXPECT_LT(std::abs(e.estimate - exact), 3.0 * e.standardError) << "seed " << seed;
  }
}

TEST(TraceEstimator, StandardErrorScalesInverselyWithAlpha) {
  const auto base = Dqc1Model::uniform(5, 1.0);
  const double ref = traceEstimate(base, 200000, 3).standardError;
  for (double a : {0.25, 0.5}) {
    const double se = traceEstimate(base.withAlpha(a), 200000, 3).standardError;
    EXPECT_NEAR(se * a / ref, 1.0, 0.1) << a;
  }
}
