#include "caterase/majorization.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "caterase/oracle.hpp"

namespace caterase {
namespace {

TEST(Majorization, BasicOrder) {
  const ProbDist pure{1.0, 0.0, 0.0};
  const ProbDist mixed{1.0 / 3, 1.0 / 3, 1.0 / 3};
  const ProbDist mid{0.5, 0.3, 0.2};
  EXPECT_TRUE(majorizes(pure, mid));
  EXPECT_TRUE(majorizes(mid, mixed));
  EXPECT_FALSE(majorizes(mixed, mid));
  EXPECT_TRUE(majorizes(mid, mid));
  EXPECT_TRUE(majorizes(ProbDist{0.2, 0.3, 0.5}, mid));  // order-free
}

TEST(Majorization, IncomparablePair) {
  const ProbDist a{0.6, 0.2, 0.2};
  const ProbDist b{0.5, 0.4, 0.1};
  EXPECT_FALSE(majorizes(a, b));
  EXPECT_FALSE(majorizes(b, a));
}

TEST(Majorization, ImpliesLowerEntropy) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ProbDist p(oracle::random_distribution(4, seed, 0.0));
    const ProbDist q(oracle::random_distribution(4, seed + 1000, 0.0));
    if (majorizes(p, q)) {
      EXPECT_LE(shannon_entropy(p), shannon_entropy(q) + 1e-12);
    }
  }
}

TEST(PassiveEnergy, MatchesBruteForceMinimum) {
  std::mt19937_64 rng(42);
  for (std::size_t trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 5;
    std::vector<double> levels(d);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (double& e : levels) e = u(rng);
    std::sort(levels.begin(), levels.end());
    const EnergyLadder ladder(levels);
    const ProbDist p(oracle::random_distribution(d, 77 + trial, 0.0));
    EXPECT_NEAR(passive_energy(ladder, p), oracle::brute_force_min_energy(ladder, p.values()),
                1e-14);
  }
}

TEST(PassiveEnergy, PartialSumFormMatchesDotProduct) {
  std::mt19937_64 rng(7);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 7;
    std::vector<double> levels(d);
    std::uniform_real_distribution<double> u(-1.0, 4.0);
    for (double& e : levels) e = u(rng);
    std::sort(levels.begin(), levels.end());
    const EnergyLadder ladder(levels);
    const ProbDist p(ProbDist(oracle::random_distribution(d, trial, 0.0)).sorted_descending());
    EXPECT_NEAR(energy_via_partial_sums(ladder, p), ladder.expectation(p.view()), 1e-12);
  }
}

TEST(MajorizingShift, ZeroAmountIsIdentity) {
  const ProbDist q{0.5, 0.3, 0.2};
  EXPECT_EQ(majorizing_shift(q, 1, 2, 0.0).values(), q.values());
}

TEST(MajorizingShift, ResultMajorizesInput) {
  const ProbDist q{0.25, 0.45, 0.3};
  for (double amount : {0.01, 0.1, 0.25, 0.3}) {
    const ProbDist p = majorizing_shift(q, 1, 2, amount);
    EXPECT_TRUE(majorizes(p, q)) << amount;
    EXPECT_LT(shannon_entropy(p), shannon_entropy(q));
    EXPECT_NEAR(p[1], 0.45 + amount, 1e-15);
  }
}

TEST(MajorizingShift, RejectsWrongDirectionOrAmount) {
  const ProbDist q{0.5, 0.3, 0.2};
  EXPECT_THROW(majorizing_shift(q, 2, 1, 0.1), std::invalid_argument);
  EXPECT_THROW(majorizing_shift(q, 0, 2, 0.25), std::invalid_argument);
  EXPECT_THROW(majorizing_shift(q, 0, 2, -0.01), std::invalid_argument);
  EXPECT_THROW(majorizing_shift(q, 0, 0, 0.0), std::invalid_argument);
}

TEST(MajorizingShift, LowersPassiveEnergy) {
  const EnergyLadder ladder = EnergyLadder::uniform(4, 1.0);
  const ProbDist q{0.4, 0.3, 0.2, 0.1};
  const ProbDist p = majorizing_shift(q, 1, 2, 0.05);
  EXPECT_LE(passive_energy(ladder, p), passive_energy(ladder, q));
}

}  // namespace
}  // namespace caterase
