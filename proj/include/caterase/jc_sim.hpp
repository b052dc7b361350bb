#pragma once

// Resonant Jaynes-Cummings erasure of a maximally mixed qubit by a truncated
// thermal oscillator, and the catalytic pipeline run on its output.
//
// Basis: system index 0 is the ground state, 1 the excited state; environment
// index n is Fock level n with energy (n + 1) omega. Joint index s * N + n.
// The interaction |0><1| (x) a^dag + h.c. couples |1, n> with |0, n+1> at
// frequency g sqrt(n+1); |0, 0> and |1, N-1> are left alone.

#include <cstddef>
#include <optional>
#include <vector>

#include "caterase/catalyst.hpp"
#include "caterase/qstate.hpp"

namespace caterase {

/// Thermal weight allowed beyond the truncated levels.
inline constexpr double kTailMass = 1e-10;
inline constexpr std::size_t kMinTruncation = 12;

struct JCModel {
  double omega = 1.0;
  double beta = 1.0;
  std::size_t truncation = 0;  ///< 0 picks required_truncation(beta, omega)
  double time = 0.0;
  double coupling = 1.0;       ///< g; times are in units of 1/g
};

/// Smallest N >= kMinTruncation with exp(-beta omega N) < kTailMass.
std::size_t required_truncation(double beta, double omega);

/// Truncation the model will actually use; throws std::invalid_argument
/// naming the required N when an explicit truncation leaves too much tail.
std::size_t effective_truncation(const JCModel& model);

EnergyLadder jc_ladder(const JCModel& model);
ProbDist jc_initial_environment(const JCModel& model);
ProbDist jc_initial_system();

/// Exact state after time model.time, built block by block (dense).
JointState evolve(const JCModel& model);

/// -dS_s at time t without building the joint state.
double jc_erasure(const JCModel& model);

struct DephasedState {
  JointState state;               ///< classical
  double discarded_coherence = 0; ///< Frobenius norm of the dropped off-diagonal part
};

DephasedState dephase(const JointState& joint);

struct TimePolicy {
  enum class Kind { MaxErasure, Fixed };
  Kind kind = Kind::MaxErasure;
  double fixed_time = 0.0;
  std::size_t scan_points = 4096;  ///< grid over (0, 2 pi / g] before refinement

  static TimePolicy max_erasure() { return {}; }
  static TimePolicy fixed(double t) { return {Kind::Fixed, t, 0}; }
};

/// Evolution time selected by the policy for this (beta, omega, N, g).
double choose_time(const JCModel& model, const TimePolicy& policy);

struct WitnessScan {
  std::optional<double> gamma_H;
  std::optional<double> gamma_E;
  std::optional<CorrelationWitness> witness_H;
  std::optional<CorrelationWitness> witness_E;
  std::size_t dv_H = 0;
  std::size_t dv_E = 0;
  std::size_t witnesses = 0;
};

struct JCRecord {
  double x = 0.0;  ///< exp(-beta omega)
  double beta = 0.0;
  double t = 0.0;
  std::size_t truncation = 0;
  // Erasure, from the exact state.
  double dSs = 0.0;
  double dSe = 0.0;
  double Qe = 0.0;
  double Ise = 0.0;
  double relent = 0.0;
  double landauer_residual = 0.0;
  double Ise_dephased = 0.0;
  double coherence_diag = 0.0;
  // Catalysis on the dephased state with the fixed tuple.
  bool tuple_is_witness = false;
  std::optional<double> gamma_H;
  std::optional<double> gamma_E;
  double dI = 0.0;           ///< at the entropy-optimal d_v
  std::size_t best_dv = 0;   ///< heat-optimal
  std::size_t best_dv_entropy = 0;
  // Same permutation and catalyst on the exact state.
  double dense_catalyst_deviation = 0.0;
  double dense_catalyst_matrix_deviation = 0.0;
  double dense_system_deviation = 0.0;
  double dense_system_matrix_deviation = 0.0;
  std::optional<WitnessScan> scan;
};

struct ExperimentOptions {
  double omega = 1.0;
  double coupling = 1.0;
  std::size_t truncation = 0;  ///< 0 adapts to each beta
  TimePolicy time;
  DvRange dv{3, 10};
  bool scan_all_witnesses = true;
};

/// The catalytic tuple used for the oscillator: I = excited, I' = ground,
/// J = Fock 0, J' = Fock 1.
inline constexpr std::size_t kTupleI = 1, kTupleIprime = 0, kTupleJ = 0, kTupleJprime = 1;

JCRecord run_point(double beta, const ExperimentOptions& options);
std::vector<JCRecord> run_experiment(const std::vector<double>& betas,
                                     const ExperimentOptions& options);

/// beta = -ln(x) / omega.
double beta_from_x(double x, double omega);

}  // namespace caterase
