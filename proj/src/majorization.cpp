#include "caterase/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace caterase {

bool majorizes(const ProbDist& p, const ProbDist& q, double eps) {
  if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
  const std::vector<double> ps = p.sorted_descending();
  const std::vector<double> qs = q.sorted_descending();
  double sp = 0.0, sq = 0.0;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    sp += ps[j];
    sq += qs[j];
    if (sp < sq - eps) return false;
  }
  return true;
}

double passive_energy(const EnergyLadder& ladder, const ProbDist& p) {
  if (p.size() != ladder.size()) throw std::invalid_argument("dimension mismatch");
  const std::vector<double> ps = p.sorted_descending();
  return ladder.expectation(ps);
}

double energy_via_partial_sums(const EnergyLadder& ladder, const ProbDist& p) {
  if (p.size() != ladder.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t d = ladder.size();
  double partial = 0.0;
  double energy = ladder[d - 1];
  for (std::size_t J = 0; J + 1 < d; ++J) {
    partial += p[J];
    energy -= partial * (ladder[J + 1] - ladder[J]);
  }
  return energy;
}

ProbDist majorizing_shift(const ProbDist& q, std::size_t to_richer, std::size_t to_poorer,
                          double amount) {
  if (to_richer >= q.size() || to_poorer >= q.size() || to_richer == to_poorer)
    throw std::invalid_argument("invalid level indices");
  if (!(q[to_richer] > q[to_poorer]))
    throw std::invalid_argument("source level must be less populated than the target");
  if (!(amount >= 0.0) || amount > q[to_poorer])
    throw std::invalid_argument("shift amount must lie in [0, q[to_poorer]]");
  std::vector<double> out = q.values();
  out[to_richer] += amount;
  out[to_poorer] = std::max(0.0, out[to_poorer] - amount);
  return ProbDist(std::move(out));
}

}  // namespace caterase
