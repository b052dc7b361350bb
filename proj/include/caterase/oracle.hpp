#pragma once

// Brute-force and sampling references for the test suites. Nothing in here
// calls the algorithms it is meant to check.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "caterase/qstate.hpp"

namespace caterase::oracle {

/// Largest d_s * d_e the permutation enumeration accepts.
inline constexpr std::size_t kMaxEnumerationDim = 8;

enum class MarginalObjective {
  MinSystemEntropy,
  /// Lowest environment energy among the placements whose system marginal
  /// reaches the Schur-Horn ceiling.
  MinHeatAtMaxErasure,
};

struct BruteForceResult {
  double value = 0.0;                    ///< objective at the optimum
  std::vector<std::size_t> placement;    ///< placement[k] = basis index of spectrum entry k
  std::vector<double> system_marginal;
  std::vector<double> env_marginal;
  std::size_t permutations = 0;          ///< placements enumerated
  std::size_t optimal_count = 0;         ///< placements within 1e-12 of the optimum
};

/// Enumerates every placement of `joint_spectrum` onto the d_s x d_e product
/// basis. The heat objective needs `ladder`; its value is the environment
/// energy.
BruteForceResult brute_force_best_marginal(const std::vector<double>& joint_spectrum,
                                           std::size_t d_s, std::size_t d_e,
                                           MarginalObjective objective,
                                           const EnergyLadder* ladder = nullptr);

/// Minimum of sum_j ladder[j] p[pi(j)] over all permutations pi (d <= 8).
double brute_force_min_energy(const EnergyLadder& ladder, const std::vector<double>& p);

/// Haar unitary: QR of a complex Gaussian matrix with the phases of R's
/// diagonal divided out.
Matrix random_unitary(std::size_t dim, std::uint64_t seed);

/// exp(-i H t) by Pade scaling and squaring.
Matrix matrix_exp(const Matrix& H, double t);

/// Full-rank classical s x e state. Product of random marginals when
/// `correlated` is false; otherwise rejection-sampled until I(s:e) > 0.01.
JointState random_correlated_joint(std::size_t d_s, std::size_t d_e, std::uint64_t seed,
                                   bool correlated);

/// Random distribution with entries bounded away from zero.
std::vector<double> random_distribution(std::size_t d, std::uint64_t seed, double floor = 0.02);

/// Equal-transfer catalyst spectrum from the (d_v + 1) x (d_v + 1) linear
/// system, solved with full-pivot LU. Returns p_1 .. p_dv followed by delta.
std::vector<double> catalyst_linear_solve(double q_IJ, double q_IJp, double q_IpJ, double q_IpJp,
                                          std::size_t d_v);

/// Partial trace by explicit index arithmetic over a row-major product basis.
Matrix partial_trace_keep(const Matrix& rho, const std::vector<std::size_t>& dims,
                          std::size_t keep);

/// omega |1><1| (x) 1 + 1 (x) sum_n (n+1) omega |n><n|
///   + g (|0><1| (x) a^dag + |1><0| (x) a) on qubit x N-level oscillator.
Matrix jc_hamiltonian(std::size_t N, double omega, double g);

/// Joint state U (rho_s (x) rho_e) U^dagger for diagonal marginals.
Matrix conjugate_product(const Matrix& U, const std::vector<double>& p_s,
                         const std::vector<double>& p_e);

}  // namespace caterase::oracle
