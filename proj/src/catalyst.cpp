#include "caterase/catalyst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "caterase/majorization.hpp"

namespace caterase {

namespace {

// Log spectra beyond this dimension are normalized with log-sum-exp.
constexpr std::size_t kLogSpaceThreshold = 32;

CatalystFailure fail(CatalystFailure::Reason reason, std::string detail,
                     std::vector<double> spectrum = {}, double delta = 0.0) {
  return {reason, std::move(detail), std::move(spectrum), delta};
}

bool correlated(double q_IJ, double q_IJp, double q_IpJ, double q_IpJp) {
  const double lhs = q_IJ * q_IpJp;
  const double rhs = q_IJp * q_IpJ;
  return lhs > rhs * (1.0 + kWitnessRelTol);
}

void require_classical_bipartite(const JointState& joint) {
  if (joint.dims().size() != 2) throw std::invalid_argument("witness search needs s x e");
  if (!joint.is_classical())
    throw std::invalid_argument("witness search needs a classical state; dephase first");
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix diagonal(const ProbDist& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = p[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

// ----------------------------------------------------------------- witnesses

double CorrelationWitness::log_gap() const {
  return std::log(ratio_strong) - std::log(ratio_weak);
}

std::strong_ordering CorrelationWitness::operator<=>(const CorrelationWitness& o) const {
  if (auto c = I <=> o.I; c != 0) return c;
  if (auto c = Iprime <=> o.Iprime; c != 0) return c;
  if (auto c = J <=> o.J; c != 0) return c;
  return Jprime <=> o.Jprime;
}

std::vector<CorrelationWitness> find_witnesses(const JointState& joint) {
  require_classical_bipartite(joint);
  const std::size_t ds = joint.dims()[0];
  const std::size_t de = joint.dims()[1];
  for (double q : joint.populations())
    if (!(q > 0.0)) throw std::invalid_argument("witness search needs full-rank populations");

  std::vector<CorrelationWitness> out;
  for (std::size_t I = 0; I < ds; ++I)
    for (std::size_t Ip = 0; Ip < ds; ++Ip) {
      if (I == Ip) continue;
      for (std::size_t J = 0; J < de; ++J)
        for (std::size_t Jp = 0; Jp < de; ++Jp) {
          if (J == Jp) continue;
          const double a = joint.population(I, J), b = joint.population(I, Jp);
          const double c = joint.population(Ip, J), d = joint.population(Ip, Jp);
          if (!correlated(a, b, c, d)) continue;
          out.push_back({I, Ip, J, Jp, a / b, c / d});
        }
    }
  return out;  // loop order is already lexicographic
}

CorrelationWitness make_witness(const JointState& joint, std::size_t I, std::size_t Iprime,
                                std::size_t J, std::size_t Jprime) {
  require_classical_bipartite(joint);
  if (I >= joint.dims()[0] || Iprime >= joint.dims()[0] || J >= joint.dims()[1] ||
      Jprime >= joint.dims()[1])
    throw std::out_of_range("witness index out of range");
  if (I == Iprime || J == Jprime) throw std::invalid_argument("witness indices must differ");
  const double a = joint.population(I, J), b = joint.population(I, Jprime);
  const double c = joint.population(Iprime, J), d = joint.population(Iprime, Jprime);
  if (!(a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0))
    throw std::invalid_argument("witness populations must be positive");
  if (!correlated(a, b, c, d))
    throw std::invalid_argument("tuple does not satisfy the ratio inequality");
  return {I, Iprime, J, Jprime, a / b, c / d};
}

// ------------------------------------------------------------------ solver

std::string to_string(CatalystFailure::Reason reason) {
  switch (reason) {
    case CatalystFailure::Reason::NonPositiveTransfer: return "non-positive transfer";
    case CatalystFailure::Reason::NonPositiveSpectrum: return "non-positive spectrum";
    case CatalystFailure::Reason::NotDecreasing: return "spectrum not decreasing";
    case CatalystFailure::Reason::ChainViolated: return "ratio chain violated";
    case CatalystFailure::Reason::Inaccurate: return "unequal transfers";
  }
  return "unknown";
}

CatalystResult solve_catalyst(double q_IJ, double q_IJp, double q_IpJ, double q_IpJp,
                              std::size_t d_v) {
  if (d_v < 3) throw std::invalid_argument("catalyst dimension must be at least 3");
  for (double q : {q_IJ, q_IJp, q_IpJ, q_IpJp})
    if (!(q > 0.0) || !std::isfinite(q))
      throw std::invalid_argument("witness populations must be positive");
  if (!correlated(q_IJ, q_IJp, q_IpJ, q_IpJp))
    throw std::invalid_argument("populations do not satisfy the ratio inequality");

  // Swaps (I',J',k) <-> (I',J,k+1) move b p_k - a p_{k+1}; the closing swap
  // (I,J',0) <-> (I,J,d_v-1) moves c p_{d_v} - d p_1. With r = a/b:
  //   r >= 1: pin p_1 = 1,   p_{K+1} = r^-K - H_K delta / b
  //   r <  1: pin p_{d_v} = 1, p_{d_v-m} = r^m + S_m delta / b
  // Each branch runs the recursion in its contracting direction.
  const double a = q_IpJ, b = q_IpJp, c = q_IJ, d = q_IJp;
  const double lr = std::log(a) - std::log(b);
  const std::size_t n = d_v;
  const auto K_last = static_cast<double>(n - 1);

  // H_K = sum_{m=1..K} r^-m,  S_m = sum_{j=0..m-1} r^j
  auto H = [&](double K) { return lr == 0.0 ? K : -std::expm1(-K * lr) / std::expm1(lr); };
  auto S = [&](double m) { return lr == 0.0 ? m : std::expm1(m * lr) / std::expm1(lr); };

  std::vector<double> logp(n);
  double delta;
  if (lr >= 0.0) {
    delta = (c * std::exp(-K_last * lr) - d) / (1.0 + c * H(K_last) / b);
    logp[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      const auto K = static_cast<double>(k);
      const double value = std::exp(-K * lr) - H(K) * delta / b;
      if (!(value > 0.0))
        return fail(CatalystFailure::Reason::NonPositiveSpectrum,
                    "entry " + std::to_string(k + 1) + " is not positive", {}, delta);
      logp[k] = std::log(value);
    }
  } else {
    delta = (c - d * std::exp(K_last * lr)) / (1.0 + d * S(K_last) / b);
    for (std::size_t m = 0; m < n; ++m) {
      const auto M = static_cast<double>(m);
      const double value = std::exp(M * lr) + S(M) * delta / b;
      if (!(value > 0.0))
        return fail(CatalystFailure::Reason::NonPositiveSpectrum,
                    "entry " + std::to_string(n - m) + " is not positive", {}, delta);
      logp[n - 1 - m] = std::log(value);
    }
  }

  double log_norm;
  if (n > kLogSpaceThreshold) {
    const double top = *std::max_element(logp.begin(), logp.end());
    double acc = 0.0;
    for (double l : logp) acc += std::exp(l - top);
    log_norm = top + std::log(acc);
  } else {
    double acc = 0.0;
    for (double l : logp) acc += std::exp(l);
    log_norm = std::log(acc);
  }
  std::vector<double> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = std::exp(logp[k] - log_norm);
  delta *= std::exp(-log_norm);

  if (!(delta > 0.0))
    return fail(CatalystFailure::Reason::NonPositiveTransfer, "closing swap runs backwards", p,
                delta);
  for (std::size_t k = 0; k < n; ++k)
    if (!(p[k] > 0.0))
      return fail(CatalystFailure::Reason::NonPositiveSpectrum,
                  "entry " + std::to_string(k + 1) + " underflowed", p, delta);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!(p[k] > p[k + 1]))
      return fail(CatalystFailure::Reason::NotDecreasing,
                  "entry " + std::to_string(k + 2) + " is not below its predecessor", p, delta);

  const double strong = c / d, weak = a / b;
  const double span = p[0] / p[n - 1];
  if (!(strong > span))
    return fail(CatalystFailure::Reason::ChainViolated, "p1/p_dv exceeds the strong ratio", p,
                delta);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double step = p[k] / p[k + 1];
    if (!(span > step && step > weak))
      return fail(CatalystFailure::Reason::ChainViolated,
                  "ratio " + std::to_string(k + 1) + " outside (weak, p1/p_dv)", p, delta);
  }

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double t = b * p[k] - a * p[k + 1];
    if (std::abs(t - delta) > 1e-12)
      return fail(CatalystFailure::Reason::Inaccurate,
                  "swap " + std::to_string(k + 1) + " moves a different amount", p, delta);
  }
  if (std::abs(c * p[n - 1] - d * p[0] - delta) > 1e-12)
    return fail(CatalystFailure::Reason::Inaccurate, "closing swap moves a different amount",
                p, delta);

  return CatalystSolution{ProbDist(std::move(p)), delta, std::nullopt};
}

CatalystResult solve_catalyst(const JointState& joint, const CorrelationWitness& w,
                              std::size_t d_v) {
  require_classical_bipartite(joint);
  CatalystResult r = solve_catalyst(joint.population(w.I, w.J), joint.population(w.I, w.Jprime),
                                    joint.population(w.Iprime, w.J),
                                    joint.population(w.Iprime, w.Jprime), d_v);
  if (auto* sol = std::get_if<CatalystSolution>(&r)) sol->witness = w;
  return r;
}

// ------------------------------------------------------------- permutation

TriplePermutation::TriplePermutation(std::vector<Swap> swaps) : swaps_(std::move(swaps)) {
  std::set<BasisTriple> seen;
  for (const auto& [x, y] : swaps_) {
    if (x.s != y.s) throw ConstructionError("swap changes the system label");
    if (x == y) throw ConstructionError("swap of a basis state with itself");
    if (!seen.insert(x).second || !seen.insert(y).second)
      throw ConstructionError("swaps are not disjoint");
  }
}

std::vector<std::size_t> TriplePermutation::index_map(std::size_t d_s, std::size_t d_e,
                                                      std::size_t d_v) const {
  std::vector<std::size_t> image(d_s * d_e * d_v);
  std::iota(image.begin(), image.end(), std::size_t{0});
  auto flat = [&](const BasisTriple& t) {
    if (t.s >= d_s || t.e >= d_e || t.v >= d_v)
      throw std::out_of_range("permutation does not fit the state dimensions");
    return (t.s * d_e + t.e) * d_v + t.v;
  };
  for (const auto& [x, y] : swaps_) {
    const std::size_t i = flat(x), j = flat(y);
    image[i] = j;
    image[j] = i;
  }
  return image;
}

TriplePermutation build_permutation(const CorrelationWitness& w, std::size_t d_v) {
  if (d_v < 3) throw std::invalid_argument("catalyst dimension must be at least 3");
  std::vector<TriplePermutation::Swap> swaps;
  swaps.reserve(d_v);
  for (std::size_t k = 0; k + 1 < d_v; ++k)
    swaps.push_back({{w.Iprime, w.Jprime, k}, {w.Iprime, w.J, k + 1}});
  swaps.push_back({{w.I, w.Jprime, 0}, {w.I, w.J, d_v - 1}});
  return TriplePermutation(std::move(swaps));
}

// ------------------------------------------------------------- application

CatalyticOutcome apply_catalytic(const JointState& joint, const CatalystSolution& sol,
                                 const TriplePermutation& perm, const EnergyLadder* ladder) {
  if (joint.dims().size() != 2) throw std::invalid_argument("catalysis needs an s x e state");
  const std::size_t ds = joint.dims()[0], de = joint.dims()[1], dv = sol.spectrum.size();
  const std::size_t D = ds * de;
  const std::vector<std::size_t> image = perm.index_map(ds, de, dv);
  const std::vector<std::size_t> dims{ds, de, dv};

  std::optional<JointState> after;
  if (joint.is_classical()) {
    std::vector<double> pops(D * dv);
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t k = 0; k < dv; ++k)
        pops[image[a * dv + k]] = joint.populations()[a] * sol.spectrum[k];
    after.emplace(dims, std::move(pops));
  } else {
    const Matrix& sigma = joint.dense();
    const auto N = static_cast<Eigen::Index>(D * dv);
    Matrix out = Matrix::Zero(N, N);
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b) {
        const std::complex<double> s =
            sigma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        if (s == 0.0) continue;
        for (std::size_t k = 0; k < dv; ++k)
          out(static_cast<Eigen::Index>(image[a * dv + k]),
              static_cast<Eigen::Index>(image[b * dv + k])) = s * sol.spectrum[k];
      }
    after.emplace(dims, std::move(out), JointState::Check::Structure);
  }

  MitigationReport r;
  r.catalyst_after = after->marginal(2);
  r.system_after = after->marginal(0);
  r.env_before = joint.marginal(1);
  r.env_after = after->marginal(1);
  r.catalyst_deviation = max_abs_diff(r.catalyst_after.view(), sol.spectrum.view());
  r.system_deviation = max_abs_diff(r.system_after.view(), joint.marginal(0).view());
  if (r.catalyst_deviation > kPreservationTol || r.system_deviation > kPreservationTol) {
    std::ostringstream os;
    os << "catalytic map broke preservation: catalyst " << r.catalyst_deviation << ", system "
       << r.system_deviation;
    throw ConstructionError(os.str());
  }

  const JointState se_after = after->trace_out_last();
  if (joint.is_classical()) {
    r.catalyst_matrix_deviation = r.catalyst_deviation;
    r.system_matrix_deviation = r.system_deviation;
    r.dSe = shannon_entropy(r.env_after) - shannon_entropy(r.env_before);
  } else {
    r.catalyst_matrix_deviation = max_abs_diff(after->reduced(2), diagonal(sol.spectrum));
    r.system_matrix_deviation = max_abs_diff(after->reduced(0), joint.reduced(0));
    r.dSe = von_neumann_entropy(after->reduced(1)) - von_neumann_entropy(joint.reduced(1));
  }
  r.dSse = entropy(se_after) - entropy(joint);
  r.dI = mutual_information(se_after) - mutual_information(joint);
  r.env_majorizes = majorizes(r.env_after, r.env_before);
  if (sol.witness)
    r.gain_on_richer = r.env_before[sol.witness->J] > r.env_before[sol.witness->Jprime];
  if (ladder) {
    r.dQe = heat(*ladder, r.env_after, r.env_before);
    r.dQe_passive = passive_energy(*ladder, r.env_after) - passive_energy(*ladder, r.env_before);
  }
  return {std::move(*after), std::move(r)};
}

std::optional<double> gamma_h(double Qe, double Qe_prime, double Te, double dSs) {
  const double denom = Qe + Te * dSs;
  if (!(denom > 0.0)) return std::nullopt;
  return (Qe - Qe_prime) / denom;
}

std::optional<double> gamma_e(double dSe_prime, double Ise) {
  if (!(Ise > 0.0)) return std::nullopt;
  return -dSe_prime / Ise;
}

// ------------------------------------------------------------ optimization

namespace {

const CorrelationWitness& greedy_pick(const std::vector<CorrelationWitness>& ws,
                                      const ProbDist& env) {
  const CorrelationWitness* best = nullptr;
  bool best_premise = false;
  for (const auto& w : ws) {
    const bool premise = env[w.J] > env[w.Jprime];
    if (!best || (premise && !best_premise) ||
        (premise == best_premise && w.log_gap() > best->log_gap())) {
      best = &w;
      best_premise = premise;
    }
  }
  return *best;
}

}  // namespace

OptimizationResult optimize_dv(const JointState& joint, DvRange range, Objective objective,
                               const EnergyLadder& ladder,
                               const std::optional<ErasureContext>& context,
                               WitnessPolicy policy) {
  std::vector<CorrelationWitness> ws = find_witnesses(joint);
  if (ws.empty()) throw UncorrelatedError();
  if (policy == WitnessPolicy::Greedy) ws = {greedy_pick(ws, joint.marginal(1))};
  return optimize_dv(joint, ws, range, objective, ladder, context);
}

OptimizationResult optimize_dv(const JointState& joint,
                               const std::vector<CorrelationWitness>& witnesses,
                               DvRange range, Objective objective, const EnergyLadder& ladder,
                               const std::optional<ErasureContext>& context) {
  if (witnesses.empty()) throw UncorrelatedError();
  if (range.min < 3 || range.max < range.min)
    throw std::invalid_argument("catalyst dimension range must satisfy 3 <= min <= max");
  if (ladder.size() != joint.dims()[1])
    throw std::invalid_argument("ladder does not match the environment");

  std::vector<CorrelationWitness> ordered = witnesses;
  std::sort(ordered.begin(), ordered.end());

  const ProbDist env = joint.marginal(1);
  const double S_env = shannon_entropy(env);

  OptimizationResult result;
  result.witnesses = ordered;
  struct Pick {
    CorrelationWitness w;
    std::size_t dv;
    CatalystSolution sol;
    double value;
  };
  std::optional<Pick> pick;
  std::vector<double> shifted(env.values());
  for (std::size_t dv = range.min; dv <= range.max; ++dv)
    for (const auto& w : ordered) {
      ++result.candidates;
      CatalystResult solved = solve_catalyst(joint, w, dv);
      auto* sol = std::get_if<CatalystSolution>(&solved);
      if (!sol) continue;
      ++result.valid_candidates;
      // Screening uses the net environment transfer; the winner is applied in
      // full below.
      const double moved = static_cast<double>(dv - 2) * sol->delta;
      double value;
      if (objective == Objective::Heat) {
        value = -moved * (ladder[w.J] - ladder[w.Jprime]);
      } else {
        shifted[w.J] += moved;
        shifted[w.Jprime] -= moved;
        value = S_env - shannon_entropy(shifted);
        shifted[w.J] = env[w.J];
        shifted[w.Jprime] = env[w.Jprime];
      }
      // Strict improvement beyond rounding, so earlier (smaller d_v, smaller
      // witness) candidates win ties.
      if (pick && !(value > pick->value + 1e-14 * std::max(1.0, std::abs(pick->value))))
        continue;
      pick = Pick{w, dv, std::move(*sol), value};
    }
  if (!pick) return result;

  CatalyticOutcome outcome =
      apply_catalytic(joint, pick->sol, build_permutation(pick->w, pick->dv), &ladder);
  CatalyticScore score;
  score.heat_reduction = -*outcome.report.dQe;
  score.entropy_reduction = -outcome.report.dSe;
  score.dI = outcome.report.dI;
  if (context) {
    score.gamma_H = gamma_h(context->Qe, context->Qe + *outcome.report.dQe, context->temperature,
                            context->dSs);
    score.gamma_E = gamma_e(outcome.report.dSe, context->Ise);
  }
  result.best = CatalyticChoice{pick->w, pick->dv, std::move(pick->sol),
                                std::move(outcome.report), score};
  return result;
}

}  // namespace caterase
