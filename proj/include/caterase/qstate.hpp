#pragma once

// Diagonal and dense state representations plus the thermodynamic functionals
// used throughout the library. All entropies are in nats; energies are in units
// of the ladder's level spacing (hbar = 1, k_B = 1).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace caterase {

using Matrix = Eigen::MatrixXcd;

/// Thrown when an internal construction produces a result that violates an
/// invariant it is supposed to guarantee (e.g. a catalyst that is not returned).
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Absolute tolerance on |sum(p) - 1| below which inputs are silently
/// renormalized; anything larger is rejected.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Normalized probability vector (the spectrum of a diagonal state).
class ProbDist {
 public:
  ProbDist() = default;
  /// Validates non-negativity and normalization; renormalizes small drift.
  explicit ProbDist(std::vector<double> probs);
  ProbDist(std::initializer_list<double> probs)
      : ProbDist(std::vector<double>(probs)) {}

  /// Divides by the sum. For weights that are known to be non-negative.
  static ProbDist from_weights(std::vector<double> weights);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& values() const { return probs_; }
  std::span<const double> view() const { return probs_; }
  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

  /// Copy sorted in non-increasing order (stable, index order on ties).
  std::vector<double> sorted_descending() const;
  bool full_rank() const;

 private:
  std::vector<double> probs_;
};

/// Energy levels of a Hamiltonian diagonal in the reference basis.
class EnergyLadder {
 public:
  EnergyLadder() = default;
  /// Levels must be sorted non-decreasing.
  explicit EnergyLadder(std::vector<double> levels,
                        std::optional<double> omega = std::nullopt);

  /// Levels j*omega for j = first, ..., first + d - 1. The default first = 1
  /// follows the H_e = sum_{j>=1} j omega |j><j| convention; heats are
  /// differences, so the offset never matters.
  static EnergyLadder uniform(std::size_t d, double omega, int first = 1);

  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t j) const { return levels_[j]; }
  const std::vector<double>& levels() const { return levels_; }
  std::optional<double> omega() const { return omega_; }

  double expectation(std::span<const double> populations) const;

 private:
  std::vector<double> levels_;
  std::optional<double> omega_;
};

/// Population tensor over a product basis of 2 (s, e) or 3 (s, e, v) factors,
/// stored row-major, with an optional dense density matrix in the same basis.
/// Without a dense matrix the state is classical (diagonal).
class JointState {
 public:
  JointState() = default;
  /// How much of the dense-state invariants to verify on construction.
  /// `Structure` skips the O(D^3) positivity check; use it only for images of
  /// already validated states under permutations or unitaries.
  enum class Check { Full, Structure };

  JointState(std::vector<std::size_t> dims, std::vector<double> populations);
  JointState(std::vector<std::size_t> dims, Matrix dense,
             Check check = Check::Full);

  static JointState product(const ProbDist& a, const ProbDist& b);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return populations_.size(); }
  bool is_classical() const { return !dense_.has_value(); }
  const std::vector<double>& populations() const { return populations_; }
  const Matrix& dense() const;

  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;
  double population(std::size_t i, std::size_t j) const {
    return populations_[index(i, j)];
  }
  double population(std::size_t i, std::size_t j, std::size_t k) const {
    return populations_[index(i, j, k)];
  }

  /// Population marginal on one factor.
  ProbDist marginal(std::size_t axis) const;
  /// Reduced density matrix on one factor (diagonal when classical).
  Matrix reduced(std::size_t axis) const;
  /// Traces out the last factor of a tripartite state.
  JointState trace_out_last() const;
  /// Full state as a dense matrix (diagonal when classical).
  Matrix to_dense() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> populations_;
  std::optional<Matrix> dense_;
};

/// Terms of the finite-bath Landauer equality
/// beta Q_e = -dS_s + I(s:e) + S(sigma_e || rho_e).
struct ErasureRecord {
  double beta = 0.0;
  double dSs = 0.0;     ///< S(sigma_s) - S(rho_s)
  double dSe = 0.0;     ///< S(sigma_e) - S(rho_e)
  double Qe = 0.0;      ///< Tr[H_e (sigma_e - rho_e)]
  double Ise = 0.0;     ///< mutual information of the final state
  double relent = 0.0;  ///< S(sigma_e || rho_e)

  /// |beta Q_e - (-dS_s + I + D)|.
  double residual() const;
};

double shannon_entropy(std::span<const double> p);
inline double shannon_entropy(const ProbDist& p) {
  return shannon_entropy(p.view());
}
/// Von Neumann entropy of a Hermitian matrix.
double von_neumann_entropy(const Matrix& rho);
/// Entropy of the full joint state (Shannon when classical).
double entropy(const JointState& joint);

/// Classical relative entropy in nats; +infinity when supp(p) is not inside
/// supp(q).
double relative_entropy(const ProbDist& p, const ProbDist& q);
/// Quantum relative entropy S(sigma || rho) for rho diagonal in the basis of
/// sigma: -sum_j sigma_jj ln rho_j - S(sigma).
double relative_entropy_to_diagonal(const Matrix& sigma, const ProbDist& rho);

ProbDist thermal_state(const EnergyLadder& ladder, double beta);

struct ThermalFit {
  double beta = 0.0;
  ProbDist state;
  /// True when the target sat below the entropy reachable at the cap on beta.
  bool capped = false;
};

/// Largest inverse temperature (in units of the smallest nonzero gap) the
/// entropy inversion will report.
inline constexpr double kBetaCap = 1e4;

/// Thermal state of `ladder` with Shannon entropy `target`. Bisection on beta
/// after bracket expansion; entropy is strictly decreasing in beta >= 0.
ThermalFit thermal_state_with_entropy(const EnergyLadder& ladder,
                                      double target);

/// Inverse temperature for which `p` is the thermal state of `ladder`. Throws
/// std::invalid_argument when `p` is not thermal within `tolerance`.
double fit_inverse_temperature(const EnergyLadder& ladder, const ProbDist& p,
                               double tolerance = 1e-9);

double heat(const EnergyLadder& ladder, const ProbDist& p_final,
            const ProbDist& p_init);
/// Same, with the final environment state given as a (possibly non-diagonal)
/// matrix.
double heat(const EnergyLadder& ladder, const Matrix& sigma_final,
            const ProbDist& p_init);

/// I(s:e) = S(s) + S(e) - S(se) for a bipartite state.
double mutual_information(const JointState& joint);

/// Decomposes the heat released by rho_s (x) rho_e -> joint_after. beta is
/// fitted from rho_e; throws std::invalid_argument if rho_e is not thermal.
ErasureRecord landauer_decomposition(const EnergyLadder& ladder,
                                     const ProbDist& rho_e,
                                     const JointState& joint_after,
                                     const ProbDist& rho_s);
ErasureRecord landauer_decomposition(const EnergyLadder& ladder,
                                     const ProbDist& rho_e, double beta,
                                     const JointState& joint_after,
                                     const ProbDist& rho_s);

}  // namespace caterase
