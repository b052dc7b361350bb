#pragma once

// Catalytic mitigation of dissipation from system-environment correlations.
//
// A correlated classical joint state sigma_se admits a tuple (I, I', J, J')
// with q[I][J]/q[I][J'] > q[I'][J]/q[I'][J']. Appending a catalyst whose
// spectrum makes every two-level swap of the loop
//
//   (I', J', k) <-> (I', J, k+1)   for k = 0 .. d_v-2
//   (I,  J', 0) <-> (I,  J, d_v-1)
//
// move the same population delta returns the catalyst exactly, leaves the
// system populations untouched (every swap is controlled on the system) and
// moves (d_v - 2) delta of environment population from J' to J.
//
// All indices here are 0-based. The CLI reports them 1-based.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "caterase/qstate.hpp"

namespace caterase {

/// Relative slack on the cross-product test q_IJ q_I'J' > q_IJ' q_I'J. Product
/// states built in floating point differ from exact ties by a few ulps.
inline constexpr double kWitnessRelTol = 1e-12;

struct CorrelationWitness {
  std::size_t I = 0;
  std::size_t Iprime = 0;
  std::size_t J = 0;
  std::size_t Jprime = 0;
  double ratio_strong = 0.0;  ///< q[I][J] / q[I][J']
  double ratio_weak = 0.0;    ///< q[I'][J] / q[I'][J']

  /// ratio_weak >= 1: here a positive transfer always gives a decreasing
  /// spectrum, so only the closing swap can fail.
  bool canonical() const { return ratio_weak >= 1.0; }
  double log_gap() const;

  /// Lexicographic on (I, I', J, J').
  std::strong_ordering operator<=>(const CorrelationWitness& other) const;
  bool operator==(const CorrelationWitness& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }
};

struct CatalystSolution {
  ProbDist spectrum;  ///< strictly decreasing
  double delta = 0.0; ///< population moved by every swap of the loop
  std::optional<CorrelationWitness> witness;
};

struct CatalystFailure {
  enum class Reason {
    NonPositiveTransfer,  ///< delta <= 0: the closing swap runs backwards
    NonPositiveSpectrum,
    NotDecreasing,
    ChainViolated,        ///< strict ratio chain around the loop broken
    Inaccurate,           ///< transfers not equal to 1e-12 after rounding
  };
  Reason reason;
  std::string detail;
  std::vector<double> spectrum;  ///< the normalized candidate, when computed
  double delta = 0.0;
};

std::string to_string(CatalystFailure::Reason reason);

using CatalystResult = std::variant<CatalystSolution, CatalystFailure>;

/// Thrown when a joint state carries no correlations a catalyst could use.
class UncorrelatedError : public std::runtime_error {
 public:
  UncorrelatedError()
      : std::runtime_error("uncorrelated, no catalytic gain possible") {}
};

/// Every tuple with ratio_strong > ratio_weak, sorted lexicographically.
/// Requires a classical bipartite state with strictly positive populations.
/// Each correlated 2x2 minor yields two tuples, (I, I', J, J') and
/// (I', I, J', J); they move environment population in opposite directions.
std::vector<CorrelationWitness> find_witnesses(const JointState& joint);

/// Makes a witness from explicit indices. Throws if the tuple does not satisfy
/// the strict ratio inequality.
CorrelationWitness make_witness(const JointState& joint, std::size_t I, std::size_t Iprime,
                                std::size_t J, std::size_t Jprime);

/// Equal-transfer catalyst spectrum of dimension d_v >= 3 for the populations
/// q_IJ, q_IJ', q_I'J, q_I'J'. The unnormalized spectrum is obtained from the
/// telescoped recursion with one end pinned, the transfer fixed by the closing
/// swap, then normalized; the result is validated.
CatalystResult solve_catalyst(double q_IJ, double q_IJp, double q_IpJ, double q_IpJp,
                              std::size_t d_v);
CatalystResult solve_catalyst(const JointState& joint, const CorrelationWitness& w,
                              std::size_t d_v);

struct BasisTriple {
  std::size_t s = 0;
  std::size_t e = 0;
  std::size_t v = 0;
  auto operator<=>(const BasisTriple&) const = default;
};

/// Product of disjoint transpositions of (s, e, v) basis states, each one
/// leaving the system label fixed.
class TriplePermutation {
 public:
  using Swap = std::pair<BasisTriple, BasisTriple>;

  TriplePermutation() = default;
  explicit TriplePermutation(std::vector<Swap> swaps);

  const std::vector<Swap>& swaps() const { return swaps_; }
  /// image[i] is where flattened basis index i is sent.
  std::vector<std::size_t> index_map(std::size_t d_s, std::size_t d_e, std::size_t d_v) const;

 private:
  std::vector<Swap> swaps_;
};

TriplePermutation build_permutation(const CorrelationWitness& w, std::size_t d_v);

struct MitigationReport {
  ProbDist catalyst_after;  ///< rho'_v populations
  ProbDist system_after;    ///< rho'_s populations
  ProbDist env_before;      ///< sigma_e
  ProbDist env_after;       ///< rho'_e
  double catalyst_deviation = 0.0;  ///< max |rho'_v - spectrum| (populations)
  double system_deviation = 0.0;    ///< max |rho'_s - sigma_s| (populations)
  /// Full-matrix versions; equal to the population ones for classical input.
  double catalyst_matrix_deviation = 0.0;
  double system_matrix_deviation = 0.0;
  double dSe = 0.0;   ///< S(rho'_e) - S(sigma_e)
  double dSse = 0.0;  ///< S(rho'_se) - S(sigma_se)
  double dI = 0.0;    ///< I'(s:e) - I(s:e)
  bool env_majorizes = false;  ///< rho'_e majorizes sigma_e
  bool gain_on_richer = false; ///< q_J > q_J' for the witness used
  /// Tr[H_e (rho'_e - sigma_e)] and its passive-state counterpart; present
  /// when a ladder was supplied.
  std::optional<double> dQe;
  std::optional<double> dQe_passive;
};

struct CatalyticOutcome {
  JointState state;  ///< s x e x v
  MitigationReport report;
};

/// Population tolerance for catalyst and system preservation; beyond it
/// apply_catalytic throws ConstructionError.
inline constexpr double kPreservationTol = 1e-12;

/// Appends the catalyst as a product factor and applies the permutation. Dense
/// input is conjugated exactly; the report always carries the marginals.
CatalyticOutcome apply_catalytic(const JointState& joint, const CatalystSolution& sol,
                                 const TriplePermutation& perm,
                                 const EnergyLadder* ladder = nullptr);

/// (Q_e - Q'_e) / (Q_e + T_e dS_s); empty when the denominator is not positive.
std::optional<double> gamma_h(double Qe, double Qe_prime, double Te, double dSs);
/// -dS'_e / I(s:e); empty when I(s:e) is not positive.
std::optional<double> gamma_e(double dSe_prime, double Ise);

enum class Objective { Heat, Entropy };
enum class WitnessPolicy {
  Exhaustive,
  /// Single witness with the largest log(ratio_strong / ratio_weak), preferring
  /// ones whose gaining level is already the more populated.
  Greedy,
};

struct DvRange {
  std::size_t min = 3;
  std::size_t max = 10;
};

/// Erasure that produced the joint; enables the normalized coefficients.
struct ErasureContext {
  double temperature = 0.0;
  double Qe = 0.0;
  double dSs = 0.0;
  double Ise = 0.0;
};

struct CatalyticScore {
  double heat_reduction = 0.0;     ///< Q_e - Q'_e
  double entropy_reduction = 0.0;  ///< -dS'_e
  double dI = 0.0;
  std::optional<double> gamma_H;
  std::optional<double> gamma_E;
};

struct CatalyticChoice {
  CorrelationWitness witness;
  std::size_t d_v = 0;
  CatalystSolution solution;
  MitigationReport report;
  CatalyticScore score;
};

struct OptimizationResult {
  std::vector<CorrelationWitness> witnesses;
  std::size_t candidates = 0;        ///< (witness, d_v) pairs tried
  std::size_t valid_candidates = 0;  ///< pairs whose catalyst validated
  std::optional<CatalyticChoice> best;
};

/// Scans witnesses x d_v and keeps the best score for `objective`. Ties go to
/// the smaller d_v, then the lexicographically smaller witness. Throws
/// UncorrelatedError when the state admits no witness.
OptimizationResult optimize_dv(const JointState& joint, DvRange range, Objective objective,
                               const EnergyLadder& ladder,
                               const std::optional<ErasureContext>& context = std::nullopt,
                               WitnessPolicy policy = WitnessPolicy::Exhaustive);

/// Same scan restricted to the given witnesses.
OptimizationResult optimize_dv(const JointState& joint,
                               const std::vector<CorrelationWitness>& witnesses,
                               DvRange range, Objective objective, const EnergyLadder& ladder,
                               const std::optional<ErasureContext>& context = std::nullopt);

}  // namespace caterase
