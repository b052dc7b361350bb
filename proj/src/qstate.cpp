#include "caterase/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace caterase {

namespace {

std::string describe_sum(double sum) {
  std::ostringstream os;
  os.precision(17);
  os << "probabilities sum to " << sum;
  return os.str();
}

// Offsets of every basis index whose `axis` digit is zero, plus the stride of
// that digit, for a row-major product basis.
struct AxisLayout {
  std::vector<std::size_t> bases;
  std::size_t stride = 1;
};

AxisLayout axis_layout(const std::vector<std::size_t>& dims, std::size_t axis) {
  AxisLayout layout;
  for (std::size_t a = axis + 1; a < dims.size(); ++a) layout.stride *= dims[a];
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                      std::multiplies<>());
  const std::size_t block = layout.stride * dims[axis];
  for (std::size_t outer = 0; outer < total; outer += block)
    for (std::size_t inner = 0; inner < layout.stride; ++inner)
      layout.bases.push_back(outer + inner);
  return layout;
}

double entropy_of_eigenvalues(const Eigen::VectorXd& values) {
  double s = 0.0;
  for (double v : values)
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- ProbDist

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument("distribution has a negative or non-finite entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) >= kNormalizationTolerance)
    throw std::invalid_argument(describe_sum(sum));
  if (sum != 1.0)
    for (double& p : probs_) p /= sum;
}

ProbDist ProbDist::from_weights(std::vector<double> weights) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(sum > 0.0)) throw std::invalid_argument("weights must have positive sum");
  for (double& w : weights) w /= sum;
  return ProbDist(std::move(weights));
}

std::vector<double> ProbDist::sorted_descending() const {
  std::vector<double> out = probs_;
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool ProbDist::full_rank() const {
  return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
}

// ------------------------------------------------------------ EnergyLadder

EnergyLadder::EnergyLadder(std::vector<double> levels, std::optional<double> omega)
    : levels_(std::move(levels)), omega_(omega) {
  if (levels_.empty()) throw std::invalid_argument("empty energy ladder");
  for (double e : levels_)
    if (!std::isfinite(e)) throw std::invalid_argument("non-finite energy level");
  if (!std::is_sorted(levels_.begin(), levels_.end()))
    throw std::invalid_argument("energy levels must be non-decreasing");
}

EnergyLadder EnergyLadder::uniform(std::size_t d, double omega, int first) {
  if (!(omega >= 0.0)) throw std::invalid_argument("omega must be non-negative");
  std::vector<double> levels(d);
  for (std::size_t j = 0; j < d; ++j)
    levels[j] = omega * static_cast<double>(first + static_cast<int>(j));
  return EnergyLadder(std::move(levels), omega);
}

double EnergyLadder::expectation(std::span<const double> populations) const {
  if (populations.size() != levels_.size())
    throw std::invalid_argument("population/ladder dimension mismatch");
  double e = 0.0;
  for (std::size_t j = 0; j < levels_.size(); ++j) e += levels_[j] * populations[j];
  return e;
}

// -------------------------------------------------------------- JointState

JointState::JointState(std::vector<std::size_t> dims, std::vector<double> populations)
    : dims_(std::move(dims)) {
  if (dims_.size() != 2 && dims_.size() != 3)
    throw std::invalid_argument("joint state needs 2 or 3 factors");
  const std::size_t total = std::accumulate(dims_.begin(), dims_.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (total == 0 || populations.size() != total)
    throw std::invalid_argument("population count does not match dimensions");
  populations_ = ProbDist(std::move(populations)).values();
}

JointState::JointState(std::vector<std::size_t> dims, Matrix dense, Check check)
    : dims_(std::move(dims)) {
  if (dims_.size() != 2 && dims_.size() != 3)
    throw std::invalid_argument("joint state needs 2 or 3 factors");
  const auto total = static_cast<Eigen::Index>(std::accumulate(
      dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>()));
  if (dense.rows() != total || dense.cols() != total)
    throw std::invalid_argument("dense matrix does not match dimensions");
  if ((dense - dense.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("dense state is not Hermitian");
  const std::complex<double> tr = dense.trace();
  if (std::abs(tr - 1.0) >= kNormalizationTolerance)
    throw std::invalid_argument("dense state trace is " + std::to_string(tr.real()));
  dense /= tr.real();
  if (check == Check::Full) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(dense, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
      throw std::invalid_argument("dense state is not positive semidefinite");
  }
  populations_.resize(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i)
    populations_[static_cast<std::size_t>(i)] = std::max(0.0, dense(i, i).real());
  dense_ = std::move(dense);
}

JointState JointState::product(const ProbDist& a, const ProbDist& b) {
  std::vector<double> pops;
  pops.reserve(a.size() * b.size());
  for (double x : a)
    for (double y : b) pops.push_back(x * y);
  return JointState({a.size(), b.size()}, std::move(pops));
}

const Matrix& JointState::dense() const {
  if (!dense_) throw std::logic_error("joint state is classical");
  return *dense_;
}

std::size_t JointState::index(std::size_t i, std::size_t j) const {
  return i * dims_[1] + j;
}

std::size_t JointState::index(std::size_t i, std::size_t j, std::size_t k) const {
  return (i * dims_[1] + j) * dims_[2] + k;
}

ProbDist JointState::marginal(std::size_t axis) const {
  if (axis >= dims_.size()) throw std::out_of_range("no such factor");
  const AxisLayout layout = axis_layout(dims_, axis);
  std::vector<double> m(dims_[axis], 0.0);
  for (std::size_t x = 0; x < dims_[axis]; ++x)
    for (std::size_t base : layout.bases) m[x] += populations_[base + x * layout.stride];
  return ProbDist::from_weights(std::move(m));
}

Matrix JointState::reduced(std::size_t axis) const {
  if (axis >= dims_.size()) throw std::out_of_range("no such factor");
  const auto d = static_cast<Eigen::Index>(dims_[axis]);
  if (!dense_) {
    const ProbDist m = marginal(axis);
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index x = 0; x < d; ++x) out(x, x) = m[static_cast<std::size_t>(x)];
    return out;
  }
  const AxisLayout layout = axis_layout(dims_, axis);
  const auto stride = static_cast<Eigen::Index>(layout.stride);
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t b : layout.bases) {
    const auto base = static_cast<Eigen::Index>(b);
    for (Eigen::Index x = 0; x < d; ++x)
      for (Eigen::Index y = 0; y < d; ++y)
        out(x, y) += (*dense_)(base + x * stride, base + y * stride);
  }
  return out;
}

JointState JointState::trace_out_last() const {
  if (dims_.size() != 3) throw std::logic_error("trace_out_last needs a tripartite state");
  const std::size_t dv = dims_[2];
  std::vector<std::size_t> dims{dims_[0], dims_[1]};
  const std::size_t n = dims_[0] * dims_[1];
  if (!dense_) {
    std::vector<double> pops(n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < dv; ++k) pops[a] += populations_[a * dv + k];
    return JointState(std::move(dims), std::move(pops));
  }
  const auto N = static_cast<Eigen::Index>(n);
  const auto V = static_cast<Eigen::Index>(dv);
  Matrix out = Matrix::Zero(N, N);
  for (Eigen::Index a = 0; a < N; ++a)
    for (Eigen::Index b = 0; b < N; ++b)
      for (Eigen::Index k = 0; k < V; ++k) out(a, b) += (*dense_)(a * V + k, b * V + k);
  return JointState(std::move(dims), std::move(out), Check::Structure);
}

Matrix JointState::to_dense() const {
  if (dense_) return *dense_;
  const auto n = static_cast<Eigen::Index>(populations_.size());
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = populations_[static_cast<std::size_t>(i)];
  return out;
}

// ------------------------------------------------------------- functionals

double ErasureRecord::residual() const {
  return std::abs(beta * Qe - (-dSs + Ise + relent));
}

double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

double von_neumann_entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(solver.eigenvalues());
}

double entropy(const JointState& joint) {
  return joint.is_classical() ? shannon_entropy(joint.populations())
                              : von_neumann_entropy(joint.dense());
}

double relative_entropy(const ProbDist& p, const ProbDist& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  // Rounding can leave -1e-17 for p == q.
  return std::max(d, 0.0);
}

double relative_entropy_to_diagonal(const Matrix& sigma, const ProbDist& rho) {
  if (static_cast<std::size_t>(sigma.rows()) != rho.size())
    throw std::invalid_argument("dimension mismatch");
  double cross = 0.0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    const double s = sigma(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)).real();
    if (s <= 0.0) continue;
    if (rho[j] == 0.0) return std::numeric_limits<double>::infinity();
    cross -= s * std::log(rho[j]);
  }
  return std::max(cross - von_neumann_entropy(sigma), 0.0);
}

ProbDist thermal_state(const EnergyLadder& ladder, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("inverse temperature must be finite and non-negative");
  const double ground = ladder[0];
  std::vector<double> w(ladder.size());
  for (std::size_t j = 0; j < ladder.size(); ++j) w[j] = std::exp(-beta * (ladder[j] - ground));
  return ProbDist::from_weights(std::move(w));
}

ThermalFit thermal_state_with_entropy(const EnergyLadder& ladder, double target) {
  const double max_entropy = std::log(static_cast<double>(ladder.size()));
  if (!(target > 0.0) || target > max_entropy + 1e-12)
    throw std::domain_error("target entropy outside (0, ln d]");
  if (target >= max_entropy - 1e-14) return {0.0, thermal_state(ladder, 0.0), false};

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < ladder.size(); ++j) {
    const double gap = ladder[j] - ladder[j - 1];
    if (gap > 0.0) min_gap = std::min(min_gap, gap);
  }
  if (!std::isfinite(min_gap))
    throw std::domain_error("degenerate ladder only admits the maximal entropy");

  auto entropy_at = [&](double beta) { return shannon_entropy(thermal_state(ladder, beta)); };
  const double cap = kBetaCap / min_gap;
  double lo = 0.0;
  double hi = 1.0 / min_gap;
  while (entropy_at(hi) > target) {
    if (hi >= cap) {
      // The degenerate ground manifold bounds the entropy from below; anything
      // under it is reported at the cap.
      return {cap, thermal_state(ladder, cap), true};
    }
    lo = hi;
    hi = std::min(2.0 * hi, cap);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (entropy_at(mid) > target ? lo : hi) = mid;
  }
  const double beta = 0.5 * (lo + hi);
  return {beta, thermal_state(ladder, beta), false};
}

double fit_inverse_temperature(const EnergyLadder& ladder, const ProbDist& p,
                               double tolerance) {
  if (p.size() != ladder.size()) throw std::invalid_argument("dimension mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {
    const double gap = ladder[j + 1] - ladder[j];
    if (gap == 0.0) continue;
    if (p[j] <= 0.0 || p[j + 1] <= 0.0)
      throw std::invalid_argument("state is not thermal: zero population");
    num += gap * std::log(p[j] / p[j + 1]);
    den += gap * gap;
  }
  const double beta = den > 0.0 ? std::max(num / den, 0.0) : 0.0;
  const ProbDist fit = thermal_state(ladder, beta);
  double worst = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) worst = std::max(worst, std::abs(fit[j] - p[j]));
  if (worst > tolerance) {
    std::ostringstream os;
    os << "state is not thermal for the ladder (best beta " << beta
       << ", max deviation " << worst << ")";
    throw std::invalid_argument(os.str());
  }
  return beta;
}

double heat(const EnergyLadder& ladder, const ProbDist& p_final, const ProbDist& p_init) {
  if (p_final.size() != ladder.size() || p_init.size() != ladder.size())
    throw std::invalid_argument("dimension mismatch");
  double q = 0.0;
  for (std::size_t j = 0; j < ladder.size(); ++j) q += ladder[j] * (p_final[j] - p_init[j]);
  return q;
}

double heat(const EnergyLadder& ladder, const Matrix& sigma_final, const ProbDist& p_init) {
  if (static_cast<std::size_t>(sigma_final.rows()) != ladder.size() ||
      p_init.size() != ladder.size())
    throw std::invalid_argument("dimension mismatch");
  double q = 0.0;
  for (std::size_t j = 0; j < ladder.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    q += ladder[j] * (sigma_final(jj, jj).real() - p_init[j]);
  }
  return q;
}

double mutual_information(const JointState& joint) {
  if (joint.dims().size() != 2)
    throw std::invalid_argument("mutual information needs a bipartite state");
  if (joint.is_classical())
    return shannon_entropy(joint.marginal(0)) + shannon_entropy(joint.marginal(1)) -
           shannon_entropy(joint.populations());
  return von_neumann_entropy(joint.reduced(0)) + von_neumann_entropy(joint.reduced(1)) -
         von_neumann_entropy(joint.dense());
}

ErasureRecord landauer_decomposition(const EnergyLadder& ladder, const ProbDist& rho_e,
                                     const JointState& joint_after, const ProbDist& rho_s) {
  return landauer_decomposition(ladder, rho_e, fit_inverse_temperature(ladder, rho_e),
                                joint_after, rho_s);
}

ErasureRecord landauer_decomposition(const EnergyLadder& ladder, const ProbDist& rho_e,
                                     double beta, const JointState& joint_after,
                                     const ProbDist& rho_s) {
  const auto& dims = joint_after.dims();
  if (dims.size() != 2 || dims[0] != rho_s.size() || dims[1] != rho_e.size() ||
      rho_e.size() != ladder.size())
    throw std::invalid_argument("dimension mismatch in Landauer decomposition");

  ErasureRecord r;
  r.beta = beta;
  if (joint_after.is_classical()) {
    const ProbDist sigma_s = joint_after.marginal(0);
    const ProbDist sigma_e = joint_after.marginal(1);
    r.dSs = shannon_entropy(sigma_s) - shannon_entropy(rho_s);
    r.dSe = shannon_entropy(sigma_e) - shannon_entropy(rho_e);
    r.Qe = heat(ladder, sigma_e, rho_e);
    r.relent = relative_entropy(sigma_e, rho_e);
  } else {
    const Matrix sigma_s = joint_after.reduced(0);
    const Matrix sigma_e = joint_after.reduced(1);
    r.dSs = von_neumann_entropy(sigma_s) - shannon_entropy(rho_s);
    r.dSe = von_neumann_entropy(sigma_e) - shannon_entropy(rho_e);
    r.Qe = heat(ladder, sigma_e, rho_e);
    r.relent = relative_entropy_to_diagonal(sigma_e, rho_e);
  }
  r.Ise = mutual_information(joint_after);
  return r;
}

}  // namespace caterase
