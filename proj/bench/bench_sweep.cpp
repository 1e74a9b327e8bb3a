// Timing comparison of the serial reference kernels against the OpenMP ones
// on an enlarged sweep grid and equivalence batch.

#include <chrono>
#include <cstdio>

#include "spinrdm/sweep.hpp"

using namespace spinrdm;

namespace {
template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}
} // namespace

int main() {
    SweepGrid grid;
    for (int i = 1; i < 100; ++i) grid.speeds.push_back(0.01 * i);
    for (int i = 0; i <= 64; ++i) grid.angles.push_back(M_PI * i / 128.0);

    std::vector<SweepRow> serial_rows, parallel_rows;
    const double t_serial = time_ms([&] { serial_rows = sg_sweep_serial(grid); });
    const double t_parallel = time_ms([&] { parallel_rows = sg_sweep_parallel(grid); });
    std::printf("sg sweep %zu points: serial %.1f ms, openmp %.1f ms (speedup %.2fx)\n",
                serial_rows.size(), t_serial, t_parallel, t_serial / t_parallel);

    double dev_serial = 0, dev_parallel = 0;
    const double e_serial = time_ms([&] { dev_serial = equivalence_max_deviation_serial(400, 7); });
    const double e_parallel =
        time_ms([&] { dev_parallel = equivalence_max_deviation_parallel(400, 7); });
    std::printf("equivalence 400 samples: serial %.1f ms, openmp %.1f ms (speedup %.2fx)\n",
                e_serial, e_parallel, e_serial / e_parallel);

    bool match = dev_serial == dev_parallel && serial_rows.size() == parallel_rows.size();
    for (size_t i = 0; match && i < serial_rows.size(); ++i)
        match = serial_rows[i].expectation_pipeline == parallel_rows[i].expectation_pipeline;
    std::printf("serial/openmp outputs %s\n", match ? "identical" : "DIFFER");
    return match ? 0 : 1;
}
