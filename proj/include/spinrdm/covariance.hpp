#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinrdm/littlegroup.hpp"

namespace spinrdm {

/// Outcome of a momentum-independence scan of the Wigner rotation
/// M_k^C(A^{-1}, p) for one transformation A.
struct IndependenceReport {
    bool independent;
    double max_deviation;
    WignerRotation reference;
    std::string label;
};

/// Classification deadband: deviations below this count as momentum
/// independent. Genuine dependence shows up four decades higher (>= 1e-4 at
/// rapidity ~1), so the classification never sits near the threshold.
inline constexpr double kIndependenceThreshold = 1e-8;

/// Elementwise max difference between SU(2) elements modulo the global sign
/// (double cover: A and -A are the same rotation).
double projective_su2_distance(const SL2CElement& a, const SL2CElement& b);

/// Evaluate wigner_rotation(set, A^{-1}, p) at `samples` seeded-random on-shell
/// momenta and report the max projective deviation from the first sample.
/// Momentum independence is the paper's criterion for reusing one effective
/// RDM after transforming the apparatus by A.
IndependenceReport momentum_independence(const ComplementarySet& set, const SL2CElement& A,
                                         int samples, uint64_t seed, std::string label = {});

/// One report per candidate transformation; deterministic for a fixed seed.
std::vector<IndependenceReport> invariance_group_scan(
    const ComplementarySet& set, const std::vector<std::pair<std::string, SL2CElement>>& candidates,
    int samples, uint64_t seed);

/// Render a scan as aligned text rows.
std::string render_reports(const std::vector<IndependenceReport>& reports);

} // namespace spinrdm
