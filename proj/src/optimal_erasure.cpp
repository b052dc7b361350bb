#include "caterase/optimal_erasure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace caterase {

namespace {

bool ratio_equal(double x, double y) {
  return std::abs(x - y) <= kRatioRelTol * std::max(std::abs(x), std::abs(y));
}

std::vector<double> consecutive_ratios(const std::vector<double>& p) {
  std::vector<double> r;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) r.push_back(p[i] / p[i + 1]);
  return r;
}

// r[i + lambda * period] == r[i] for every in-range pair. Returns the largest
// lambda that had a pair to compare.
bool periodic(const std::vector<double>& r, std::size_t period, std::size_t& lambda_max) {
  lambda_max = 0;
  bool ok = true;
  for (std::size_t lambda = 1; lambda * period < r.size(); ++lambda) {
    lambda_max = lambda;
    for (std::size_t i = 0; i + lambda * period < r.size(); ++i)
      ok = ok && ratio_equal(r[i + lambda * period], r[i]);
  }
  return ok;
}

bool sorted_descending(const ProbDist& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return true;
}

}  // namespace

std::string to_string(PeriodicityReport::Condition c) {
  switch (c) {
    case PeriodicityReport::Condition::None: return "none";
    case PeriodicityReport::Condition::EnvMultiple: return "i";
    case PeriodicityReport::Condition::SystemMultiple: return "ii";
  }
  return "none";
}

PeriodicityReport check_periodicity(const ProbDist& p_s, const ProbDist& p_e) {
  if (!p_s.full_rank() || !p_e.full_rank())
    throw std::invalid_argument(
        "periodicity checks need full-rank marginals: a zero eigenvalue makes a joint ratio "
        "diverge");
  PeriodicityReport rep;
  rep.p_s = p_s.sorted_descending();
  rep.p_e = p_e.sorted_descending();
  const std::size_t ds = rep.p_s.size(), de = rep.p_e.size();

  const double span = rep.p_s.front() / rep.p_s.back();
  const std::vector<double> re = consecutive_ratios(rep.p_e);
  rep.premise_ok = std::all_of(re.begin(), re.end(), [&](double r) {
    return r >= span || ratio_equal(r, span);
  });

  if (de % ds == 0) {
    const std::size_t m = de / ds;
    std::size_t lambda_max = 0;
    if (periodic(re, m, lambda_max)) {
      rep.condition = PeriodicityReport::Condition::EnvMultiple;
      rep.m = m;
      rep.lambda_max = lambda_max;
      rep.periodic_ratios = re;
      return rep;
    }
  }
  if (ds % de == 0) {
    const std::vector<double> rs = consecutive_ratios(rep.p_s);
    std::size_t lambda_max = 0;
    if (periodic(rs, de, lambda_max)) {
      rep.condition = PeriodicityReport::Condition::SystemMultiple;
      rep.m = ds / de;
      rep.lambda_max = lambda_max;
      rep.periodic_ratios = rs;
    }
  }
  return rep;
}

ProbDist sorted_joint_spectrum(const ProbDist& p_s, const ProbDist& p_e) {
  std::vector<double> joint;
  joint.reserve(p_s.size() * p_e.size());
  for (double a : p_s)
    for (double b : p_e) joint.push_back(a * b);
  std::stable_sort(joint.begin(), joint.end(), std::greater<>());
  return ProbDist(std::move(joint));
}

VseResult build_vse(const ProbDist& p_s, const ProbDist& p_e) {
  const PeriodicityReport rep = check_periodicity(p_s, p_e);
  if (rep.condition == PeriodicityReport::Condition::None)
    throw std::invalid_argument("neither periodicity condition holds");
  const std::size_t ds = p_s.size(), de = p_e.size();

  std::vector<double> joint(ds * de);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < de; ++j) joint[i * de + j] = p_s[i] * p_e[j];
  std::vector<std::size_t> order(joint.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return joint[x] > joint[y]; });

  VseResult out;
  out.permutation.source = order;
  std::vector<double> qs(ds, 0.0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.permutation.assignment.emplace_back(k / de, k % de);
    qs[k / de] += joint[order[k]];
  }
  out.sigma_s = ProbDist::from_weights(qs);

  std::vector<double> cond0(de);
  for (std::size_t j = 0; j < de; ++j) cond0[j] = joint[order[j]] / qs[0];
  for (std::size_t n = 1; n < ds; ++n)
    for (std::size_t j = 0; j < de; ++j)
      out.product_deviation = std::max(
          out.product_deviation, std::abs(joint[order[n * de + j]] / qs[n] - cond0[j]));
  if (out.product_deviation > 1e-12) {
    std::ostringstream os;
    os << "block-sorted state is not a product (deviation " << out.product_deviation << ")";
    throw ConstructionError(os.str());
  }
  out.sigma_e = ProbDist::from_weights(std::move(cond0));
  return out;
}

std::vector<double> max_erasure_bound(const ProbDist& p_se_sorted, std::size_t d_s,
                                      std::size_t d_e) {
  if (p_se_sorted.size() != d_s * d_e) throw std::invalid_argument("dimension mismatch");
  if (!sorted_descending(p_se_sorted))
    throw std::invalid_argument("joint eigenvalues must be sorted descending");
  std::vector<double> bound(d_s);
  double acc = 0.0;
  for (std::size_t I = 0; I < d_s; ++I) {
    for (std::size_t k = I * d_e; k < (I + 1) * d_e; ++k) acc += p_se_sorted[k];
    bound[I] = acc;
  }
  bound.back() = 1.0;
  return bound;
}

std::optional<double> thermal_output_gamma(const ProbDist& p_se_sorted, const ProbDist& p_e,
                                           std::size_t d_e) {
  if (p_e.size() != d_e || p_se_sorted.size() < d_e || p_se_sorted.size() % d_e != 0)
    throw std::invalid_argument("dimension mismatch");
  if (!sorted_descending(p_se_sorted) || !sorted_descending(p_e))
    throw std::invalid_argument("inputs must be sorted descending");
  if (d_e < 2) return std::nullopt;

  std::vector<double> a, b;
  for (std::size_t j = 0; j + 1 < d_e; ++j) {
    a.push_back(std::log(p_se_sorted[j] / p_se_sorted[j + 1]));
    b.push_back(std::log(p_e[j] / p_e[j + 1]));
  }
  double ab = 0.0, bb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    ab += a[j] * b[j];
    bb += b[j] * b[j];
  }
  if (bb == 0.0) return std::nullopt;  // flat environment: no temperature to rescale
  const double gamma = ab / bb;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(std::expm1(a[j] - gamma * b[j])) > kRatioRelTol) return std::nullopt;
  if (!(gamma < 1.0)) return std::nullopt;
  return gamma;
}

double min_heat(const EnergyLadder& ladder, const ProbDist& rho_e, double dSs) {
  fit_inverse_temperature(ladder, rho_e);  // throws unless thermal
  if (dSs == 0.0) return 0.0;
  const double target = shannon_entropy(rho_e) - dSs;
  const double ceiling = std::log(static_cast<double>(ladder.size()));
  if (!(target > 0.0) || target > ceiling + 1e-12)
    throw std::domain_error("target entropy outside (0, ln d_e]");
  const ThermalFit fit = thermal_state_with_entropy(ladder, std::min(target, ceiling));
  return heat(ladder, fit.state, rho_e);
}

}  // namespace caterase
