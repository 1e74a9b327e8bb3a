#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinrdm/scenario.hpp"

namespace spinrdm {

struct SweepGrid {
    double mass = 1.0;
    std::vector<double> speeds;
    std::vector<double> angles;
    double phi_x = 0.0;
    double phi_y = 0.0;
};

struct SweepRow {
    double v;
    double theta;
    double expectation_pipeline;
    double expectation_closed_form;
    double abs_diff;
};

/// Serial reference: one run_scenario per grid point, row-major over
/// (speed, angle).
std::vector<SweepRow> sg_sweep_serial(const SweepGrid& grid);

/// OpenMP kernel over grid points. Rows come out in the same deterministic
/// grid order as the serial reference and must match it bitwise.
std::vector<SweepRow> sg_sweep_parallel(const SweepGrid& grid);

/// CSV with a fixed header and shortest-round-trip decimal floats.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// Max |Tr(rho A_C) - Tr(tau^C a_C)| over `samples` seeded random mixed
/// multi-momentum density matrices with random observables, alternating Boost
/// and SternGerlach sets. Serial reference and OpenMP kernel; per-sample
/// seeding keeps both bitwise identical.
double equivalence_max_deviation_serial(int samples, uint64_t seed);
double equivalence_max_deviation_parallel(int samples, uint64_t seed);

} // namespace spinrdm
