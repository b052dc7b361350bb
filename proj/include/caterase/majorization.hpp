#pragma once

#include <cstddef>

#include "caterase/qstate.hpp"

namespace caterase {

inline constexpr double kMajorizationEps = 1e-12;

/// p majorizes q: every prefix sum of the descending-sorted p is at least the
/// matching prefix sum of q, up to `eps`.
bool majorizes(const ProbDist& p, const ProbDist& q, double eps = kMajorizationEps);

/// Minimum of Tr(H U rho U^dagger) over unitaries: populations sorted
/// descending against the ascending ladder.
double passive_energy(const EnergyLadder& ladder, const ProbDist& p);

/// Energy of a passive state written through its partial sums S_J:
/// -sum_{J<d} S_J (e_{J+1} - e_J) + e_d. `p` must already be in passive order.
double energy_via_partial_sums(const EnergyLadder& ladder, const ProbDist& p);

/// Moves `amount` of probability from index `to_poorer` into `to_richer`,
/// where p[to_richer] > p[to_poorer]. The result majorizes the input.
ProbDist majorizing_shift(const ProbDist& q, std::size_t to_richer, std::size_t to_poorer,
                          double amount);

}  // namespace caterase
