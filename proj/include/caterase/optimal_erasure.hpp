#pragma once

// Maximum erasure with minimum entropy dissipation for product inputs
// rho_s (x) rho_e: periodicity checks on the marginal ratios, the block-sorting
// permutation V_se that realizes the Schur-Horn ceiling, and minimum-heat
// targets.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caterase/qstate.hpp"

namespace caterase {

/// Relative tolerance on ratio equalities (periodicity, gamma fit).
inline constexpr double kRatioRelTol = 1e-10;

struct PeriodicityReport {
  enum class Condition { None, EnvMultiple, SystemMultiple };

  bool premise_ok = false;  ///< p_e[j]/p_e[j+1] >= p_s[0]/p_s[d_s-1] for all j
  Condition condition = Condition::None;
  std::size_t m = 0;                    ///< multiplicity of the matching condition
  std::size_t lambda_max = 0;           ///< largest lambda with an in-range index pair
  std::vector<double> periodic_ratios;  ///< the ratio sequence that was checked
  std::vector<double> p_s;              ///< inputs sorted descending
  std::vector<double> p_e;

  /// Premise plus one of the two periodicity conditions.
  bool applies() const { return premise_ok && condition != Condition::None; }
};

std::string to_string(PeriodicityReport::Condition c);

/// Evaluates the premise and both periodicity conditions on the descending
/// sorted inputs. Condition EnvMultiple needs d_e = m d_s and r_e of period m;
/// SystemMultiple needs d_s = m d_e and r_s of period d_e. Rejects inputs that
/// are not full rank.
PeriodicityReport check_periodicity(const ProbDist& p_s, const ProbDist& p_e);

struct BlockPermutation {
  /// assignment[k] = (i_s, j_e) receiving the k-th largest joint eigenvalue.
  std::vector<std::pair<std::size_t, std::size_t>> assignment;
  /// source[k] = flattened index (i * d_e + j) of that eigenvalue in
  /// rho_s (x) rho_e.
  std::vector<std::size_t> source;
};

struct VseResult {
  BlockPermutation permutation;
  ProbDist sigma_s;
  ProbDist sigma_e;
  /// Largest deviation of a block conditional from sigma_e.
  double product_deviation = 0.0;
};

/// Sorts the joint eigenvalues descending (stable, (i, j) tie-break) and hands
/// rank block n to system level n. Throws ConstructionError when the output is
/// not a product within 1e-12, and std::invalid_argument when neither
/// periodicity condition holds.
VseResult build_vse(const ProbDist& p_s, const ProbDist& p_e);

/// Descending joint spectrum of p_s (x) p_e.
ProbDist sorted_joint_spectrum(const ProbDist& p_s, const ProbDist& p_e);

/// Prefix sums of the first I d_e sorted joint eigenvalues, I = 1 .. d_s: the
/// ceiling on any unitarily reachable system marginal.
std::vector<double> max_erasure_bound(const ProbDist& p_se_sorted, std::size_t d_s,
                                      std::size_t d_e);

/// gamma < 1 with p_se[j]/p_se[j+1] = (p_e[j]/p_e[j+1])^gamma for j < d_e - 1,
/// fitted by least squares in log space and residual-checked; empty when the
/// relation does not hold.
std::optional<double> thermal_output_gamma(const ProbDist& p_se_sorted, const ProbDist& p_e,
                                           std::size_t d_e);

/// Heat released into a thermal rho_e when its entropy rises by -dSs at
/// minimum energy cost: the thermal state of entropy S(rho_e) - dSs, compared
/// against rho_e.
double min_heat(const EnergyLadder& ladder, const ProbDist& rho_e, double dSs);

}  // namespace caterase
