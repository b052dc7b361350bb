#include "caterase/oracle.hpp"

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

namespace caterase::oracle {
namespace {

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  for (std::size_t d : {2u, 5u, 12u}) {
    const Matrix U = random_unitary(d, 17);
    const Matrix I = Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    EXPECT_LT((U.adjoint() * U - I).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_EQ(U, random_unitary(d, 17));
    EXPECT_NE(U, random_unitary(d, 18));
  }
}

TEST(MatrixExp, ZeroTimeIsIdentity) {
  const Matrix H = jc_hamiltonian(4, 1.0, 0.7);
  EXPECT_LT((matrix_exp(H, 0.0) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MatrixExp, TwoLevelRabiClosedForm) {
  Matrix H = Matrix::Zero(2, 2);
  H(0, 1) = H(1, 0) = 0.8;
  const double t = 1.7;
  const Matrix U = matrix_exp(H, t);
  const std::complex<double> i(0.0, 1.0);
  EXPECT_LT(std::abs(U(0, 0) - std::cos(0.8 * t)), 1e-12);
  EXPECT_LT(std::abs(U(0, 1) + i * std::sin(0.8 * t)), 1e-12);
  EXPECT_LT(std::abs(U(1, 1) - std::cos(0.8 * t)), 1e-12);
}

TEST(JCHamiltonian, StructureOfTruncatedModel) {
  const std::size_t N = 5;
  const Matrix H = jc_hamiltonian(N, 1.0, 0.5);
  EXPECT_LT((H - H.adjoint()).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_NEAR(H(0, 0).real(), 1.0, 1e-16);                    // |0,0>
  EXPECT_NEAR(H(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N)).real(), 2.0, 1e-16);
  // |1,n> <-> |0,n+1> with strength g sqrt(n+1).
  EXPECT_NEAR(H(static_cast<Eigen::Index>(N + 2), 3).real(), 0.5 * std::sqrt(3.0), 1e-15);
  EXPECT_EQ(H(static_cast<Eigen::Index>(2 * N - 1), 0), std::complex<double>(0.0));
}

TEST(BruteForce, QubitPairOptimumIsSwap) {
  const BruteForceResult r =
      brute_force_best_marginal({0.48, 0.32, 0.12, 0.08}, 2, 2, MarginalObjective::MinSystemEntropy);
  EXPECT_EQ(r.permutations, 24u);
  EXPECT_NEAR(r.system_marginal[0], 0.8, 1e-15);
  EXPECT_NEAR(r.value, -(0.8 * std::log(0.8) + 0.2 * std::log(0.2)), 1e-15);
}

TEST(BruteForce, CountsDegenerateOptima) {
  const BruteForceResult r =
      brute_force_best_marginal({0.25, 0.25, 0.25, 0.25}, 2, 2, MarginalObjective::MinSystemEntropy);
  EXPECT_EQ(r.optimal_count, 24u);
}

TEST(BruteForce, HeatObjectiveNeedsLadderAndCap) {
  EXPECT_THROW(brute_force_best_marginal({0.5, 0.2, 0.2, 0.1}, 2, 2,
                                         MarginalObjective::MinHeatAtMaxErasure),
               std::invalid_argument);
  EXPECT_THROW(brute_force_best_marginal(std::vector<double>(9, 1.0 / 9), 3, 3,
                                         MarginalObjective::MinSystemEntropy),
               std::invalid_argument);
  const EnergyLadder ladder = EnergyLadder::uniform(2, 1.0);
  const auto r = brute_force_best_marginal({0.48, 0.32, 0.12, 0.08}, 2, 2,
                                           MarginalObjective::MinHeatAtMaxErasure, &ladder);
  // Ceiling (0.8, 0.2); the cheapest environment keeps 0.6 in the ground level.
  EXPECT_NEAR(r.system_marginal[0], 0.8, 1e-15);
  EXPECT_NEAR(r.value, 0.6 * 1.0 + 0.4 * 2.0, 1e-15);
}

TEST(BruteForce, MinEnergyPairsLargestWithLowest) {
  const EnergyLadder ladder({0.0, 1.0, 3.0});
  EXPECT_NEAR(brute_force_min_energy(ladder, {0.2, 0.5, 0.3}), 0.3 + 0.6, 1e-15);
}

TEST(RandomJoint, CorrelatedAndProductVariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const JointState c = random_correlated_joint(3, 2, seed, true);
    const JointState p = random_correlated_joint(3, 2, seed, false);
    EXPECT_GT(mutual_information(c), 0.01);
    EXPECT_LT(mutual_information(p), 1e-12);
    for (double q : c.populations()) EXPECT_GT(q, 0.0);
    EXPECT_EQ(c.populations(), random_correlated_joint(3, 2, seed, true).populations());
  }
}

TEST(RandomDistribution, RespectsFloor) {
  const auto p = random_distribution(6, 4, 0.05);
  double sum = 0.0;
  for (double v : p) {
    EXPECT_GE(v, 0.05 / 6 - 1e-15);
    sum += v;
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(LinearSolve, HandSolvedThreeLevel) {
  const auto x = catalyst_linear_solve(0.4, 0.1, 0.2, 0.3, 3);
  ASSERT_EQ(x.size(), 4u);
  EXPECT_NEAR(x[0], 12.0 / 29, 1e-15);
  EXPECT_NEAR(x[1], 10.0 / 29, 1e-15);
  EXPECT_NEAR(x[2], 7.0 / 29, 1e-15);
  EXPECT_NEAR(x[3], 1.6 / 29, 1e-15);
}

TEST(PartialTrace, ProductFactorsComeBack) {
  const Matrix rho = conjugate_product(Matrix::Identity(6, 6), {0.3, 0.7}, {0.5, 0.2, 0.3});
  const Matrix rs = partial_trace_keep(rho, {2, 3}, 0);
  const Matrix re = partial_trace_keep(rho, {2, 3}, 1);
  EXPECT_NEAR(rs(1, 1).real(), 0.7, 1e-15);
  EXPECT_NEAR(re(2, 2).real(), 0.3, 1e-15);
  EXPECT_EQ(re(0, 1), std::complex<double>(0.0));
}

}  // namespace
}  // namespace caterase::oracle
