#include "caterase/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace caterase::oracle {

namespace {

double entropy_of(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log(x);
  return s;
}

}  // namespace

BruteForceResult brute_force_best_marginal(const std::vector<double>& joint_spectrum,
                                           std::size_t d_s, std::size_t d_e,
                                           MarginalObjective objective,
                                           const EnergyLadder* ladder) {
  const std::size_t D = d_s * d_e;
  if (D > kMaxEnumerationDim) throw std::invalid_argument("enumeration capped at d_s d_e <= 8");
  if (joint_spectrum.size() != D) throw std::invalid_argument("spectrum size mismatch");
  if (objective == MarginalObjective::MinHeatAtMaxErasure && (!ladder || ladder->size() != d_e))
    throw std::invalid_argument("heat objective needs an environment ladder");

  // Schur-Horn ceiling, computed here from scratch.
  std::vector<double> desc = joint_spectrum;
  std::sort(desc.begin(), desc.end(), std::greater<>());
  std::vector<double> ceiling(d_s, 0.0);
  for (std::size_t I = 0; I < d_s; ++I)
    for (std::size_t k = 0; k < (I + 1) * d_e; ++k) ceiling[I] += desc[k];

  std::vector<std::size_t> placement(D);
  std::iota(placement.begin(), placement.end(), std::size_t{0});
  BruteForceResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<double> values;
  values.reserve(40320);

  do {
    std::vector<double> ps(d_s, 0.0), pe(d_e, 0.0);
    for (std::size_t k = 0; k < D; ++k) {
      ps[placement[k] / d_e] += joint_spectrum[k];
      pe[placement[k] % d_e] += joint_spectrum[k];
    }
    double value;
    if (objective == MarginalObjective::MinSystemEntropy) {
      value = entropy_of(ps);
    } else {
      std::vector<double> sorted = ps;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      double acc = 0.0;
      bool at_ceiling = true;
      for (std::size_t I = 0; I < d_s; ++I) {
        acc += sorted[I];
        at_ceiling = at_ceiling && std::abs(acc - ceiling[I]) <= 1e-12;
      }
      if (!at_ceiling) {
        values.push_back(std::numeric_limits<double>::infinity());
        ++best.permutations;
        continue;
      }
      value = 0.0;
      for (std::size_t j = 0; j < d_e; ++j) value += (*ladder)[j] * pe[j];
    }
    values.push_back(value);
    ++best.permutations;
    if (value < best.value) {
      best.value = value;
      best.placement = placement;
      best.system_marginal = ps;
      best.env_marginal = pe;
    }
  } while (std::next_permutation(placement.begin(), placement.end()));

  for (double v : values)
    if (std::abs(v - best.value) <= 1e-12) ++best.optimal_count;
  return best;
}

double brute_force_min_energy(const EnergyLadder& ladder, const std::vector<double>& p) {
  if (p.size() != ladder.size() || p.size() > 8)
    throw std::invalid_argument("brute-force energy needs matching dims <= 8");
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double e = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) e += ladder[j] * p[perm[j]];
    best = std::min(best, e);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix Z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) Z(i, j) = {normal(rng), normal(rng)};
  Eigen::HouseholderQR<Matrix> qr(Z);
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = R(j, j);
    const double mag = std::abs(d);
    Q.col(j) *= mag > 0.0 ? d / mag : 1.0;
  }
  return Q;
}

Matrix matrix_exp(const Matrix& H, double t) {
  const Matrix A = std::complex<double>(0.0, -t) * H;
  return A.exp();
}

std::vector<double> random_distribution(std::size_t d, std::uint64_t seed, double floor) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(floor, 1.0);
  std::vector<double> w(d);
  for (double& x : w) x = u(rng);
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= s;
  return w;
}

JointState random_correlated_joint(std::size_t d_s, std::size_t d_e, std::uint64_t seed,
                                   bool correlated) {
  if (d_s < 2 || d_e < 2) throw std::invalid_argument("dimensions must be at least 2");
  if (!correlated) {
    const std::vector<double> a = random_distribution(d_s, seed);
    const std::vector<double> b = random_distribution(d_e, seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> pops;
    for (double x : a)
      for (double y : b) pops.push_back(x * y);
    return JointState({d_s, d_e}, std::move(pops));
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<double> pops = random_distribution(d_s * d_e, seed + 7919 * attempt);
    std::vector<double> ms(d_s, 0.0), me(d_e, 0.0);
    for (std::size_t i = 0; i < d_s; ++i)
      for (std::size_t j = 0; j < d_e; ++j) {
        ms[i] += pops[i * d_e + j];
        me[j] += pops[i * d_e + j];
      }
    const double mi = entropy_of(ms) + entropy_of(me) - entropy_of(pops);
    if (mi > 0.01) return JointState({d_s, d_e}, std::move(pops));
  }
}

std::vector<double> catalyst_linear_solve(double q_IJ, double q_IJp, double q_IpJ, double q_IpJp,
                                          std::size_t d_v) {
  const auto n = static_cast<Eigen::Index>(d_v);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  // Rows 0 .. n-2: q_I'J' p_k - q_I'J p_{k+1} - delta = 0.
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    A(k, k) = q_IpJp;
    A(k, k + 1) = -q_IpJ;
    A(k, n) = -1.0;
  }
  // Closing swap: q_IJ p_dv - q_IJ' p_1 - delta = 0.
  A(n - 1, n - 1) = q_IJ;
  A(n - 1, 0) = -q_IJp;
  A(n - 1, n) = -1.0;
  for (Eigen::Index k = 0; k < n; ++k) A(n, k) = 1.0;
  rhs(n) = 1.0;
  const Eigen::VectorXd x = A.fullPivLu().solve(rhs);
  return {x.data(), x.data() + x.size()};
}

Matrix partial_trace_keep(const Matrix& rho, const std::vector<std::size_t>& dims,
                          std::size_t keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (static_cast<std::size_t>(rho.rows()) != total || keep >= dims.size())
    throw std::invalid_argument("partial trace dimension mismatch");
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> out(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
      out[a] = idx % dims[a];
      idx /= dims[a];
    }
    return out;
  };
  const auto dk = static_cast<Eigen::Index>(dims[keep]);
  Matrix out = Matrix::Zero(dk, dk);
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits(i);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits(j);
      bool match = true;
      for (std::size_t a = 0; a < dims.size(); ++a)
        if (a != keep && di[a] != dj[a]) match = false;
      if (match)
        out(static_cast<Eigen::Index>(di[keep]), static_cast<Eigen::Index>(dj[keep])) +=
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Matrix jc_hamiltonian(std::size_t N, double omega, double g) {
  const auto n = static_cast<Eigen::Index>(N);
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  Matrix He = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) He(k, k) = omega * static_cast<double>(k + 1);
  Matrix Hs = Matrix::Zero(2, 2);
  Hs(1, 1) = omega;
  Matrix lower = Matrix::Zero(2, 2);  // |0><1|
  lower(0, 1) = 1.0;

  auto kron = [](const Matrix& A, const Matrix& B) {
    Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      for (Eigen::Index j = 0; j < A.cols(); ++j)
        K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
  };
  const Matrix I2 = Matrix::Identity(2, 2), IN = Matrix::Identity(n, n);
  return kron(Hs, IN) + kron(I2, He) +
         g * (kron(lower, a.adjoint()) + kron(lower.adjoint(), a));
}

Matrix conjugate_product(const Matrix& U, const std::vector<double>& p_s,
                         const std::vector<double>& p_e) {
  const auto n = static_cast<Eigen::Index>(p_s.size() * p_e.size());
  if (U.rows() != n) throw std::invalid_argument("unitary dimension mismatch");
  Matrix rho = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < p_s.size(); ++i)
    for (std::size_t j = 0; j < p_e.size(); ++j) {
      const auto k = static_cast<Eigen::Index>(i * p_e.size() + j);
      rho(k, k) = p_s[i] * p_e[j];
    }
  return U * rho * U.adjoint();
}

}  // namespace caterase::oracle
