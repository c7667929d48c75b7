#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "qcorr/eigen.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

// Mutual information from an independent eigen-decomposition.
double oracleMutualInfo(const DensityMatrix& rho) {
  auto entropy = [](const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> s(e, Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (Eigen::Index k = 0; k < s.eigenvalues().size(); ++k) {
      const double l = s.eigenvalues()(k);
      if (l > 1e-15) h -= l * std::log2(l);
    }
    return h;
  };
  const auto& m = rho.matrix();
  return entropy(partialTrace(m, rho.dimA(), rho.dimB(), Subsystem::A)) +
         entropy(partialTrace(m, rho.dimA(), rho.dimB(), Subsystem::B)) - entropy(m);
}

}  // namespace

TEST(TwoQubit, EigenvaluesMatchMatrix) {
  const TwoQubitParams p{{0.3, -0.5, 0.1}};
  auto expected = twoQubitEigenvalues(p);
  std::sort(expected.begin(), expected.end());
  const auto values = hermitianEigenvalues(twoQubitState(p).matrix());
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(values[k], expected[k], 1e-14);
}

TEST(TwoQubit, ClosedFormAgainstOracle) {
  const TwoQubitParams p{{0.3, -0.5, 0.1}};
  const auto a = twoQubitAnalytics(p);
  // Values computed independently with numpy.
  EXPECT_NEAR(a.ipMax, 0.18872187554086717, 1e-14);
  EXPECT_NEAR(a.smut, 0.2573404680377651, 1e-14);
  EXPECT_NEAR(a.smut, oracleMutualInfo(twoQubitState(p)), 1e-12);
}

TEST(TwoQubit, SingletAndInadmissibleParameters) {
  const auto s = twoQubitAnalytics({{-1.0, -1.0, -1.0}});
  EXPECT_NEAR(s.smut, 2.0, 1e-15);
  EXPECT_NEAR(s.ipMax, 1.0, 1e-15);
  EXPECT_NEAR(s.qP, 1.0, 1e-15);
  EXPECT_THROW(twoQubitState({{1.0, 1.0, 1.0}}), InvalidState);
  EXPECT_THROW(twoQubitState({{1.2, 0.0, 0.0}}), InvalidState);
}

TEST(TwoQubit, SignedSingularValuesRecoverLocalForm) {
  Rng rng = makeRng(12);
  const TwoQubitParams p{{0.4, -0.3, 0.2}};
  const auto rho = applyLocalUnitaries(twoQubitState(p), randomUnitary(2, rng), randomUnitary(2, rng));
  std::array<double, 9> w{};
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      w[(j - 1) * 3 + (k - 1)] =
          (rho.matrix() * tensorProduct(pauli(j), pauli(k))).trace().real();
  const auto back = signedSingularValues(w);
  const auto a = twoQubitAnalytics(back);
  const auto b = twoQubitAnalytics(p);
  EXPECT_NEAR(a.smut, b.smut, 1e-10);
  EXPECT_NEAR(a.ipMax, b.ipMax, 1e-10);
  EXPECT_LT(maxAbsDiff(twoQubitStateFromCorrelation(w).matrix(), rho.matrix()), 1e-12);
}

TEST(Werner, ClosedFormAgainstOracle) {
  struct Case {
    std::size_t d;
    double alpha, smut, ipMax;
  };
  // Reference values computed independently with numpy.
  const Case cases[] = {
      {2, 0.5, 0.20751874963942196, 0.08170416594551067},
      {3, 0.5, 0.21401190626648736, 0.06303440583379372},
      {10, 0.3, 0.0679831703339655, 0.006809201094728046},
      {3, 1.0 / 3.0, 0.08496250072115563, 0.023684376262023132},
  };
  for (const auto& c : cases) {
    const auto a = wernerAnalytics({c.d, c.alpha});
    EXPECT_NEAR(a.smut, c.smut, 1e-12);
    EXPECT_NEAR(a.ipMax, c.ipMax, 1e-12);
    const auto rho = wernerState({c.d, c.alpha});
    EXPECT_NEAR(oracleMutualInfo(rho), a.smut, 1e-12);
    const auto comp = ProjectiveBasis::computational(c.d);
    EXPECT_NEAR(mutualInfoForBases(rho, comp, comp), a.ipMax, 1e-12);
  }
}

TEST(Werner, EndpointsAndAdmissibility) {
  for (std::size_t d : {2u, 3u, 10u}) {
    const auto zero = wernerAnalytics({d, 0.0});
    EXPECT_EQ(zero.qP, 0.0);
    EXPECT_GT(wernerAnalytics({d, 1.0 / static_cast<double>(d)}).qP, 0.0);
  }
  EXPECT_NEAR(wernerAnalytics({2, 1.0}).qP, 1.0, 1e-12);
  EXPECT_THROW(wernerState({2, 1.5}), InvalidState);
  EXPECT_THROW(wernerState({1, 0.5}), InvalidArgument);
  EXPECT_NO_THROW(wernerState({3, -1.0}));
}

TEST(Werner, SwapOperatorSquaresToIdentity) {
  const auto p = swapOperator(3);
  EXPECT_LT(maxAbsDiff(p * p, ComplexMatrix::identity(9)), 1e-15);
}

TEST(Locking, StateStructure) {
  for (std::size_t d : {2u, 3u}) {
    const auto rho = lockingState(LockingParams::fourier(d));
    EXPECT_EQ(rho.dimA(), 2 * d);
    EXPECT_EQ(rho.dimB(), d);
    EXPECT_NEAR(quantumMutualInfo(rho), std::log2(static_cast<double>(d)), 1e-9);
    EXPECT_NEAR(oracleMutualInfo(rho), std::log2(static_cast<double>(d)), 1e-12);
  }
  LockingParams biased{2, ComplexMatrix::identity(2)};
  EXPECT_THROW(lockingState(biased), InvalidArgument);
}

TEST(Locking, ProtocolWithOneBit) {
  OptimizerConfig cfg;
  cfg.restarts = 8;
  const auto r = lockingDemo(LockingParams::fourier(2), cfg);
  EXPECT_NEAR(r.iWithComm, 2.0, 1e-12);
  EXPECT_NEAR(r.iAfterOneBit, 1.0, 1e-12);
  EXPECT_NEAR(r.iMaxNoComm, 0.5, 5e-3);
  EXPECT_NEAR(r.unlockGain, 0.5, 5e-3);
  const auto s = sigmaLockingDemo(2, cfg);
  EXPECT_NEAR(s.iMaxNoComm, s.smut, 1e-6);
  EXPECT_NEAR(s.unlockGain, 0.0, 1e-6);
}

TEST(ClassicalQuantum, ConstructionAndErrors) {
  std::vector<DensityMatrix> cond{DensityMatrix::maximallyMixed(2), DensityMatrix::maximallyMixed(2)};
  const std::vector<double> p{0.5, 0.5};
  const auto rho = cqState(p, cond);
  EXPECT_NEAR(quantumMutualInfo(rho), 0.0, 1e-12);
  const std::vector<double> three{0.2, 0.3, 0.5};
  EXPECT_THROW(cqState(three, cond), DimensionMismatch);
}

TEST(Trine, StateAndFrozenGridOptimum) {
  const auto rho = trineState();
  EXPECT_EQ(rho.dimA(), 3u);
  EXPECT_EQ(rho.dimB(), 2u);
  EXPECT_NEAR(quantumMutualInfo(rho), 1.0, 1e-12);
  // Brute-force 100 x 100 grid value recorded from an independent run.
  EXPECT_NEAR(trineProjectiveGrid(100).value, 0.459147917027245, 1e-12);
}

TEST(Biorthogonal, ClassicalCorrelationsAreAttainedByTheBases) {
  Rng rng = makeRng(3);
  const ProjectiveBasis a(randomUnitary(2, rng));
  const ProjectiveBasis b(randomUnitary(3, rng));
  const std::vector<double> p{0.1, 0.2, 0.15, 0.25, 0.05, 0.25};
  const auto rho = biorthogonalState(p, a, b);
  EXPECT_NEAR(mutualInfoForBases(rho, a, b), quantumMutualInfo(rho), 1e-10);
}
