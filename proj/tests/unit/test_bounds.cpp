#include <gtest/gtest.h>

#include <cmath>

#include "qcorr/bounds.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

TEST(Mub, FamiliesAreUnbiased) {
  EXPECT_LT(mubUnbiasednessError(mubFamily(2, 3)), 1e-15);
  EXPECT_LT(mubUnbiasednessError(mubFamily(3, 4)), 1e-12);
  EXPECT_LT(mubUnbiasednessError(mubFamily(5, 6)), 1e-12);
  EXPECT_LT(mubUnbiasednessError(mubFamily(7, 8)), 1e-12);
  EXPECT_EQ(mubFamily(5, 3).count(), 3u);
}

TEST(Mub, UnsupportedDimensionsAreTyped) {
  EXPECT_THROW(mubFamily(4, 2), UnsupportedDimension);
  EXPECT_THROW(mubFamily(9, 2), UnsupportedDimension);
  EXPECT_THROW(mubFamily(3, 5), InvalidArgument);
}

TEST(Mub, Deterministic) {
  const auto a = mubFamily(5, 6);
  const auto b = mubFamily(5, 6);
  for (std::size_t m = 0; m < a.count(); ++m)
    EXPECT_EQ(maxAbsDiff(a.bases[m].unitary(), b.bases[m].unitary()), 0.0);
}

TEST(BoundValues, ClosedForms) {
  EXPECT_DOUBLE_EQ(prop2Bound(2), 1.0);
  EXPECT_NEAR(prop4Bound(DensityMatrix::maximallyMixed(2), 2, 3), 1.0, 1e-15);
  const auto cor = corollaryBounds(3);
  EXPECT_NEAR(cor.value, 4.0 * std::log2(1.5), 1e-12);
  EXPECT_LT(cor.value, cor.strictCap);
  EXPECT_NEAR(corollaryBounds(2).value, 1.0, 1e-15);
  const auto p3 = prop3Bounds(3, 4);
  EXPECT_EQ(p3.K, 2u);
  EXPECT_NEAR(p3.eq20, 2.3398500028846247, 1e-12);
  EXPECT_THROW(prop4Bound(DensityMatrix::maximallyMixed(3), 3, 3), InvalidArgument);
}

// The K-dependent bound beats (M/2) log2 d exactly when M > sqrt(d) + 1.
TEST(BoundValues, Prop3Crossover) {
  for (std::size_t d = 2; d < 40; ++d)
    for (std::size_t M = 2; M <= d + 1; ++M) {
      const double m = static_cast<double>(M);
      const double threshold = std::sqrt(static_cast<double>(d)) + 1.0;
      if (std::abs(m - threshold) < 1e-9) continue;
      EXPECT_EQ(prop3Bounds(d, M).eq20Stronger, m > threshold) << "d=" << d << " M=" << M;
    }
}

TEST(BoundValues, OrderingOverPurities) {
  Rng rng = makeRng(17);
  for (std::size_t d : {2u, 3u, 5u}) {
    for (int t = 0; t < 20; ++t) {
      const auto rhoA = randomDensityMatrix(d, 1, 1 + t % d, rng);
      const double p4 = prop4Bound(rhoA, d, d + 1);
      const auto cor = corollaryBounds(d);
      EXPECT_LE(p4, cor.value + 1e-12);
      EXPECT_LT(cor.value, cor.strictCap);
    }
  }
}

TEST(ITotal, BellStateSaturatesProp2) {
  const std::vector<Complex> bell{1.0, 0.0, 0.0, 1.0};
  const auto rho = DensityMatrix::pure(bell, 2, 2);
  const auto rep = iTotal(rho, mubFamily(2, 2), ProjectiveBasis::computational(2).toPovm());
  ASSERT_EQ(rep.iValues.size(), 2u);
  EXPECT_NEAR(rep.iValues[0], 1.0, 1e-12);
  EXPECT_NEAR(rep.iValues[1], 0.0, 1e-12);
  EXPECT_NEAR(rep.iTot, 1.0, 1e-9);
  EXPECT_TRUE(rep.allSatisfied());
}

TEST(ITotal, ProductStateCarriesNoInformation) {
  Rng rng = makeRng(1);
  const auto rho = productState(randomDensityMatrix(3, 1, 3, rng), randomDensityMatrix(2, 1, 2, rng));
  const auto rep = iTotal(rho, mubFamily(3, 4), randomRankOnePovm(2, 4, rng));
  for (double v : rep.iValues) EXPECT_NEAR(v, 0.0, 1e-12);
  EXPECT_TRUE(rep.allSatisfied());
}

TEST(ITotal, RandomCampaignQutrits) {
  std::size_t violations = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng = makeRng(303, k);
    const auto rho = randomDensityMatrix(3, 3, 1 + k % 9, rng);
    const auto rep = iTotal(rho, mubFamily(3, 4), randomRankOnePovm(3, 3 + k % 7, rng));
    double sum = 0.0;
    for (double v : rep.iValues) sum += v;
    EXPECT_EQ(sum, rep.iTot);
    for (const auto& c : rep.checks)
      if (c.applicable && !c.satisfied) ++violations;
  }
  EXPECT_EQ(violations, 0u);
}

TEST(ITotal, DimensionChecks) {
  const auto rho = DensityMatrix::maximallyMixed(2, 3);
  EXPECT_THROW(iTotal(rho, mubFamily(3, 2), ProjectiveBasis::computational(3).toPovm()),
               DimensionMismatch);
  EXPECT_THROW(iTotal(rho, mubFamily(2, 2), ProjectiveBasis::computational(2).toPovm()),
               DimensionMismatch);
}

TEST(EntropicSum, Examples) {
  const auto zero = DensityMatrix::pure(std::vector<Complex>{1.0, 0.0}, 2, 1);
  EXPECT_NEAR(entropicSum(zero, mubFamily(2, 2)), 1.0, 1e-12);
  EXPECT_NEAR(entropicSum(DensityMatrix::maximallyMixed(3), mubFamily(3, 4)), 4.0 * std::log2(3.0),
              1e-12);
  Rng rng = makeRng(55);
  const auto family = mubFamily(3, 4);
  const double bound = entropicLowerBound(3, 4);
  for (int t = 0; t < 100; ++t) {
    const auto psi = randomPureVector(3, rng);
    EXPECT_GE(entropicSum(DensityMatrix::pure(psi, 3, 1), family), bound - 1e-9);
  }
  EXPECT_NEAR(entropicLowerBound(2, 2), 1.0, 1e-15);
}
