#include "spinrdm/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "spinrdm/sampling.hpp"

namespace spinrdm {

namespace {

std::string fmt_d(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

SweepRow eval_point(const SweepGrid& grid, double v, double theta) {
    SGScenario s;
    s.mass = grid.mass;
    s.speed = v;
    s.angle = theta;
    s.first = {Vec3::UnitX(), grid.phi_x};
    s.second = {Vec3::UnitY(), grid.phi_y};
    const ScenarioResult r = run_scenario(s);
    return SweepRow{v, theta, r.expectation, r.closed_form,
                    std::abs(r.expectation - r.closed_form)};
}

double equivalence_sample(uint64_t seed, int index) {
    Sampler sampler(seed + 0x9e3779b97f4a7c15ull * static_cast<uint64_t>(index + 1));
    const double mass = sampler.uniform(0.5, 2.0);
    const ComplementarySet boost_set = ComplementarySet::boost(mass);
    const DensityMatrix rho =
        sampler.mixed_density(mass, boost_set, 2 + index % 2, 2 + index % 3);
    const ComplementarySet obs_set =
        (index % 2 == 0)
            ? boost_set
            : ComplementarySet::stern_gerlach(mass, sampler.unit_vector(),
                                              sampler.uniform(0.0, 2.0 * M_PI));
    const Observable obs{sampler.uniform(-1, 1), sampler.unit_vector() * sampler.uniform(0.1, 2.0),
                         obs_set};
    const double full = expectation_full(rho, obs);
    const double reduced = expectation_reduced(effective_rdm(rho, obs_set), obs);
    return std::abs(full - reduced);
}

} // namespace

std::vector<SweepRow> sg_sweep_serial(const SweepGrid& grid) {
    if (grid.speeds.empty() || grid.angles.empty()) throw Error("sweep grid is empty");
    std::vector<SweepRow> rows;
    rows.reserve(grid.speeds.size() * grid.angles.size());
    for (double v : grid.speeds)
        for (double theta : grid.angles) rows.push_back(eval_point(grid, v, theta));
    return rows;
}

std::vector<SweepRow> sg_sweep_parallel(const SweepGrid& grid) {
    if (grid.speeds.empty() || grid.angles.empty()) throw Error("sweep grid is empty");
    const std::ptrdiff_t nv = static_cast<std::ptrdiff_t>(grid.speeds.size());
    const std::ptrdiff_t nt = static_cast<std::ptrdiff_t>(grid.angles.size());
    std::vector<SweepRow> rows(static_cast<size_t>(nv * nt));
#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t i = 0; i < nv; ++i)
        for (std::ptrdiff_t j = 0; j < nt; ++j)
            rows[static_cast<size_t>(i * nt + j)] =
                eval_point(grid, grid.speeds[static_cast<size_t>(i)],
                           grid.angles[static_cast<size_t>(j)]);
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "v,theta,expectation_pipeline,expectation_closed_form,abs_diff\n";
    for (const auto& r : rows)
        os << fmt_d(r.v) << ',' << fmt_d(r.theta) << ',' << fmt_d(r.expectation_pipeline) << ','
           << fmt_d(r.expectation_closed_form) << ',' << fmt_d(r.abs_diff) << '\n';
    return os.str();
}

double equivalence_max_deviation_serial(int samples, uint64_t seed) {
    double max_dev = 0.0;
    for (int i = 0; i < samples; ++i) max_dev = std::max(max_dev, equivalence_sample(seed, i));
    return max_dev;
}

double equivalence_max_deviation_parallel(int samples, uint64_t seed) {
    std::vector<double> devs(static_cast<size_t>(samples), 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) devs[static_cast<size_t>(i)] = equivalence_sample(seed, i);
    double max_dev = 0.0;
    for (double d : devs) max_dev = std::max(max_dev, d);
    return max_dev;
}

} // namespace spinrdm
