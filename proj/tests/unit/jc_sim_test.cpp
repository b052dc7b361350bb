#include "caterase/jc_sim.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "caterase/oracle.hpp"

namespace caterase {
namespace {

using std::numbers::pi;

JCModel model_at(double x, double t, std::size_t N = 0) {
  JCModel m;
  m.beta = beta_from_x(x, 1.0);
  m.time = t;
  m.truncation = N;
  return m;
}

TEST(Truncation, AdaptsToTemperature) {
  EXPECT_EQ(required_truncation(beta_from_x(0.65, 1.0), 1.0), 54u);
  EXPECT_EQ(required_truncation(beta_from_x(0.05, 1.0), 1.0), kMinTruncation);
  EXPECT_EQ(effective_truncation(model_at(0.65, 1.0)), 54u);
  EXPECT_EQ(effective_truncation(model_at(0.65, 1.0, 60)), 60u);
}

TEST(Truncation, ExplicitTooSmallNamesRequirement) {
  try {
    effective_truncation(model_at(0.65, 1.0, 20));
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("54"), std::string::npos) << e.what();
  }
}

TEST(Initial, ThermalLadderAndMixedQubit) {
  const JCModel m = model_at(0.3, 0.0);
  const ProbDist pe = jc_initial_environment(m);
  EXPECT_NEAR(pe[1] / pe[0], 0.3, 1e-14);
  EXPECT_NEAR(jc_ladder(m).levels()[0], 1.0, 1e-15);
  EXPECT_EQ(jc_initial_system().values(), (std::vector<double>{0.5, 0.5}));
}

TEST(Evolve, ZeroTimeIsIdentity) {
  const JCModel m = model_at(0.4, 0.0);
  const JointState j = evolve(m);
  const ProbDist pe = jc_initial_environment(m);
  const std::size_t N = pe.size();
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t n = 0; n < N; ++n) EXPECT_NEAR(j.population(s, n), 0.5 * pe[n], 1e-16);
  EXPECT_NEAR(dephase(j).discarded_coherence, 0.0, 1e-16);
  EXPECT_EQ(jc_erasure(m), 0.0);
}

TEST(Evolve, QuarterPeriodSwapsLowestBlock) {
  const JCModel m = model_at(0.4, pi / 2);
  const JointState j = evolve(m);
  const ProbDist pe = jc_initial_environment(m);
  EXPECT_NEAR(j.population(0, 1), 0.5 * pe[0], 1e-15);
  EXPECT_NEAR(j.population(1, 0), 0.5 * pe[1], 1e-15);
  EXPECT_NEAR(j.population(0, 0), 0.5 * pe[0], 1e-15);  // uncoupled
}

TEST(Evolve, CoherenceLargestAtEighthPeriod) {
  const JCModel m = model_at(0.4, pi / 4);
  const JointState j = evolve(m);
  const ProbDist pe = jc_initial_environment(m);
  const std::size_t N = pe.size();
  const double coh = std::abs(j.dense()(static_cast<Eigen::Index>(N),  // |1,0>
                                        1));                           // |0,1>
  EXPECT_NEAR(coh, 0.5 * 0.5 * (pe[0] - pe[1]), 1e-15);
}

TEST(Evolve, MatchesMatrixExponential) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(0.05, 0.6), ut(0.0, 2 * pi);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = ux(rng), t = ut(rng);
    const std::size_t N = required_truncation(beta_from_x(x, 1.0), 1.0) + trial % 3;
    const JCModel m = model_at(x, t, N);
    const Matrix U = oracle::matrix_exp(oracle::jc_hamiltonian(N, 1.0, 1.0), t);
    const Matrix ref = oracle::conjugate_product(U, jc_initial_system().values(),
                                                 jc_initial_environment(m).values());
    EXPECT_LT((evolve(m).dense() - ref).cwiseAbs().maxCoeff(), 1e-9) << "x=" << x << " t=" << t;
  }
}

TEST(Evolve, PreservesSpectrum) {
  const JCModel m = model_at(0.5, 1.3);
  const JointState j = evolve(m);
  EXPECT_NEAR(j.dense().trace().real(), 1.0, 1e-14);
  EXPECT_NEAR(entropy(j), shannon_entropy(jc_initial_system()) +
                              shannon_entropy(jc_initial_environment(m)),
              1e-12);
  EXPECT_NEAR(-jc_erasure(m),
              shannon_entropy(j.marginal(0)) - shannon_entropy(jc_initial_system()), 1e-14);
}

TEST(Dephase, KeepsPopulationsAndMeasuresCoherence) {
  const JointState j = evolve(model_at(0.4, 0.9));
  const DephasedState d = dephase(j);
  EXPECT_TRUE(d.state.is_classical());
  for (std::size_t k = 0; k < j.size(); ++k)
    EXPECT_NEAR(d.state.populations()[k], j.populations()[k], 1e-16);
  const Matrix off = j.dense() - Matrix(j.dense().diagonal().asDiagonal());
  EXPECT_NEAR(d.discarded_coherence, off.norm(), 1e-15);
  EXPECT_GT(d.discarded_coherence, 0.0);
}

TEST(ChooseTime, FixedAndMaxErasure) {
  JCModel m = model_at(0.4, 0.0);
  EXPECT_EQ(choose_time(m, TimePolicy::fixed(0.8)), 0.8);
  const double t = choose_time(m, TimePolicy::max_erasure());
  EXPECT_GT(t, 0.0);
  EXPECT_LE(t, 2 * pi);
  m.time = t;
  const double best = jc_erasure(m);
  for (int k = 1; k <= 500; ++k) {
    m.time = 2 * pi * k / 500;
    EXPECT_LE(jc_erasure(m), best + 1e-12);
  }
}

TEST(RunPoint, LandauerAndEntropyBalance) {
  ExperimentOptions o;
  o.scan_all_witnesses = false;
  for (double x : {0.1, 0.42, 0.6}) {
    const JCRecord r = run_point(beta_from_x(x, 1.0), o);
    EXPECT_LT(r.landauer_residual, 1e-10) << x;
    // Unitary dynamics from a product: entropy changes add up to the correlations.
    EXPECT_NEAR(r.dSs + r.dSe, r.Ise, 1e-10) << x;
    EXPECT_LT(r.dSs, 0.0);
    EXPECT_GT(r.Ise, r.Ise_dephased);
  }
}

TEST(RunPoint, CatalysisHelpsNearPeak) {
  ExperimentOptions o;
  o.scan_all_witnesses = false;
  const JCRecord r = run_point(beta_from_x(0.42, 1.0), o);
  EXPECT_TRUE(r.tuple_is_witness);
  ASSERT_TRUE(r.gamma_H && r.gamma_E);
  EXPECT_GT(*r.gamma_H, 0.0);
  EXPECT_GT(*r.gamma_E, 0.0);
  EXPECT_GE(r.best_dv, 3u);
  EXPECT_LE(r.best_dv, 10u);
  EXPECT_LT(std::abs(r.dI), r.Ise);
  EXPECT_LE(r.dense_catalyst_deviation, 1e-12);
  EXPECT_LE(r.dense_system_deviation, 1e-12);
}

TEST(RunPoint, ColdBathLeavesLittleToRecover) {
  ExperimentOptions o;
  o.scan_all_witnesses = false;
  const JCRecord cold = run_point(beta_from_x(0.05, 1.0), o);
  const JCRecord mid = run_point(beta_from_x(0.42, 1.0), o);
  ASSERT_TRUE(cold.gamma_H && mid.gamma_H);
  EXPECT_LT(*cold.gamma_H, *mid.gamma_H);
  EXPECT_LT(*cold.gamma_H, 0.05);
}

TEST(RunPoint, WitnessScanNeverWorseThanFixedTuple) {
  ExperimentOptions o;
  const JCRecord r = run_point(beta_from_x(0.3, 1.0), o);
  ASSERT_TRUE(r.scan.has_value());
  ASSERT_TRUE(r.scan->gamma_H && r.gamma_H);
  EXPECT_GE(*r.scan->gamma_H, *r.gamma_H - 1e-12);
  EXPECT_GT(r.scan->witnesses, 0u);
}

TEST(RunExperiment, RejectsEmptyGrid) {
  EXPECT_THROW(run_experiment({}, ExperimentOptions{}), std::invalid_argument);
  ExperimentOptions o;
  o.scan_all_witnesses = false;
  const auto rows = run_experiment({1.0, 2.0}, o);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(rows[1].x, std::exp(-2.0), 1e-15);
}

}  // namespace
}  // namespace caterase
