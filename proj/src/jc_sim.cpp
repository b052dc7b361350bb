#include "caterase/jc_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace caterase {

namespace {

void validate(const JCModel& m) {
  if (!(m.omega > 0.0) || !std::isfinite(m.omega))
    throw std::invalid_argument("omega must be positive");
  if (!(m.beta > 0.0) || !std::isfinite(m.beta))
    throw std::invalid_argument("beta must be positive and finite");
  if (!(m.coupling > 0.0) || !std::isfinite(m.coupling))
    throw std::invalid_argument("coupling must be positive");
  if (!std::isfinite(m.time)) throw std::invalid_argument("time must be finite");
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log1p(-p);
  return h;
}

// Excited-state population of the system at time t.
double excited_population(const std::vector<double>& pe, double g, double t) {
  const std::size_t N = pe.size();
  double p1 = 0.5 * pe[N - 1];
  for (std::size_t n = 0; n + 1 < N; ++n) {
    const double phase = g * std::sqrt(static_cast<double>(n + 1)) * t;
    const double c = std::cos(phase), s = std::sin(phase);
    p1 += 0.5 * (c * c * pe[n] + s * s * pe[n + 1]);
  }
  return p1;
}

}  // namespace

std::size_t required_truncation(double beta, double omega) {
  if (!(beta > 0.0) || !(omega > 0.0)) throw std::invalid_argument("beta omega must be positive");
  const double n = std::ceil(std::log(kTailMass) / (-beta * omega));
  if (!std::isfinite(n) || n > 1e6) throw std::invalid_argument("temperature too high to truncate");
  auto N = static_cast<std::size_t>(std::max(n, 1.0));
  // Guard the boundary where x^N lands exactly on the tail mass.
  if (std::exp(-beta * omega * static_cast<double>(N)) >= kTailMass) ++N;
  return std::max(N, kMinTruncation);
}

std::size_t effective_truncation(const JCModel& model) {
  validate(model);
  const std::size_t need = required_truncation(model.beta, model.omega);
  if (model.truncation == 0) return need;
  if (std::exp(-model.beta * model.omega * static_cast<double>(model.truncation)) >= kTailMass)
    throw std::invalid_argument("truncation " + std::to_string(model.truncation) +
                                " leaves thermal tail above 1e-10; need N >= " +
                                std::to_string(need));
  return model.truncation;
}

EnergyLadder jc_ladder(const JCModel& model) {
  return EnergyLadder::uniform(effective_truncation(model), model.omega, 1);
}

ProbDist jc_initial_environment(const JCModel& model) {
  return thermal_state(jc_ladder(model), model.beta);
}

ProbDist jc_initial_system() { return ProbDist{0.5, 0.5}; }

JointState evolve(const JCModel& model) {
  const ProbDist pe = jc_initial_environment(model);
  const std::size_t N = pe.size();
  const auto n_ = static_cast<Eigen::Index>(N);
  Matrix rho = Matrix::Zero(2 * n_, 2 * n_);
  rho(0, 0) = 0.5 * pe[0];
  rho(n_ + n_ - 1, n_ + n_ - 1) = 0.5 * pe[N - 1];
  for (std::size_t n = 0; n + 1 < N; ++n) {
    const double phase = model.coupling * std::sqrt(static_cast<double>(n + 1)) * model.time;
    const double c = std::cos(phase), s = std::sin(phase);
    const double A = 0.5 * pe[n], B = 0.5 * pe[n + 1];
    const auto u = n_ + static_cast<Eigen::Index>(n);      // |1, n>
    const auto w = static_cast<Eigen::Index>(n + 1);       // |0, n+1>
    rho(u, u) = c * c * A + s * s * B;
    rho(w, w) = s * s * A + c * c * B;
    const std::complex<double> coh(0.0, s * c * (A - B));
    rho(u, w) = coh;
    rho(w, u) = std::conj(coh);
  }
  return JointState({2, N}, std::move(rho), JointState::Check::Structure);
}

double jc_erasure(const JCModel& model) {
  const ProbDist pe = jc_initial_environment(model);
  return std::log(2.0) - binary_entropy(excited_population(pe.values(), model.coupling, model.time));
}

DephasedState dephase(const JointState& joint) {
  if (joint.is_classical()) return {joint, 0.0};
  const Matrix& rho = joint.dense();
  double off = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (i != j) off += std::norm(rho(i, j));
  return {JointState(joint.dims(), joint.populations()), std::sqrt(off)};
}

double choose_time(const JCModel& model, const TimePolicy& policy) {
  if (policy.kind == TimePolicy::Kind::Fixed) {
    if (!(policy.fixed_time >= 0.0) || !std::isfinite(policy.fixed_time))
      throw std::invalid_argument("fixed time must be finite and non-negative");
    return policy.fixed_time;
  }
  if (policy.scan_points < 3) throw std::invalid_argument("time scan needs at least 3 points");
  const std::vector<double> pe = jc_initial_environment(model).values();
  const double g = model.coupling;
  auto erasure = [&](double t) {
    return std::log(2.0) - binary_entropy(excited_population(pe, g, t));
  };

  const double period = 2.0 * std::numbers::pi / g;
  const double step = period / static_cast<double>(policy.scan_points);
  std::size_t best_k = 1;
  double best = erasure(step);
  for (std::size_t k = 2; k <= policy.scan_points; ++k) {
    const double v = erasure(step * static_cast<double>(k));
    if (v > best) {
      best = v;
      best_k = k;
    }
  }

  // Golden-section refinement on the neighbouring cells.
  double lo = step * static_cast<double>(best_k - 1);
  double hi = std::min(step * static_cast<double>(best_k + 1), period);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = erasure(x1), f2 = erasure(x2);
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = erasure(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = erasure(x1);
    }
  }
  const double t_ref = 0.5 * (lo + hi);
  return erasure(t_ref) > best ? t_ref : step * static_cast<double>(best_k);
}

double beta_from_x(double x, double omega) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("x = exp(-beta omega) must lie in (0, 1)");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return -std::log(x) / omega;
}

JCRecord run_point(double beta, const ExperimentOptions& options) {
  JCModel model{options.omega, beta, options.truncation, 0.0, options.coupling};
  model.truncation = effective_truncation(model);
  model.time = choose_time(model, options.time);

  const EnergyLadder ladder = jc_ladder(model);
  const ProbDist rho_e = thermal_state(ladder, beta);
  const ProbDist rho_s = jc_initial_system();
  const JointState exact = evolve(model);

  JCRecord r;
  r.x = std::exp(-beta * options.omega);
  r.beta = beta;
  r.t = model.time;
  r.truncation = model.truncation;

  const ErasureRecord er = landauer_decomposition(ladder, rho_e, beta, exact, rho_s);
  r.dSs = er.dSs;
  r.dSe = er.dSe;
  r.Qe = er.Qe;
  r.Ise = er.Ise;
  r.relent = er.relent;
  r.landauer_residual = er.residual();

  const DephasedState deph = dephase(exact);
  r.coherence_diag = deph.discarded_coherence;
  r.Ise_dephased = mutual_information(deph.state);

  const ErasureContext ctx{1.0 / beta, er.Qe, er.dSs, er.Ise};
  std::optional<CorrelationWitness> tuple;
  try {
    tuple = make_witness(deph.state, kTupleI, kTupleIprime, kTupleJ, kTupleJprime);
  } catch (const std::invalid_argument&) {
  }
  r.tuple_is_witness = tuple.has_value();
  if (tuple) {
    const OptimizationResult heat_opt =
        optimize_dv(deph.state, {*tuple}, options.dv, Objective::Heat, ladder, ctx);
    const OptimizationResult ent_opt =
        optimize_dv(deph.state, {*tuple}, options.dv, Objective::Entropy, ladder, ctx);
    if (heat_opt.best) {
      const CatalyticChoice& h = *heat_opt.best;
      r.gamma_H = h.score.gamma_H;
      r.best_dv = h.d_v;
      const CatalyticOutcome dense =
          apply_catalytic(exact, h.solution, build_permutation(h.witness, h.d_v), &ladder);
      r.dense_catalyst_deviation = dense.report.catalyst_deviation;
      r.dense_catalyst_matrix_deviation = dense.report.catalyst_matrix_deviation;
      r.dense_system_deviation = dense.report.system_deviation;
      r.dense_system_matrix_deviation = dense.report.system_matrix_deviation;
    }
    if (ent_opt.best) {
      r.gamma_E = ent_opt.best->score.gamma_E;
      r.dI = ent_opt.best->score.dI;
      r.best_dv_entropy = ent_opt.best->d_v;
    }
  }

  if (options.scan_all_witnesses) {
    WitnessScan scan;
    try {
      const OptimizationResult h =
          optimize_dv(deph.state, options.dv, Objective::Heat, ladder, ctx);
      const OptimizationResult e =
          optimize_dv(deph.state, options.dv, Objective::Entropy, ladder, ctx);
      scan.witnesses = h.witnesses.size();
      if (h.best) {
        scan.gamma_H = h.best->score.gamma_H;
        scan.witness_H = h.best->witness;
        scan.dv_H = h.best->d_v;
      }
      if (e.best) {
        scan.gamma_E = e.best->score.gamma_E;
        scan.witness_E = e.best->witness;
        scan.dv_E = e.best->d_v;
      }
    } catch (const UncorrelatedError&) {
    } catch (const std::invalid_argument&) {
      // a vanishing population leaves some tuples undefined
    }
    r.scan = scan;
  }
  return r;
}

std::vector<JCRecord> run_experiment(const std::vector<double>& betas,
                                     const ExperimentOptions& options) {
  if (betas.empty()) throw std::invalid_argument("empty grid");
  std::vector<JCRecord> out;
  out.reserve(betas.size());
  for (double beta : betas) out.push_back(run_point(beta, options));
  return out;
}

}  // namespace caterase
