#include <algorithm>
#include <doctest.h>

#include "spinrdm/sweep.hpp"

using namespace spinrdm;

namespace {
SweepGrid paper_grid() {
    SweepGrid g;
    for (int i = 1; i <= 9; ++i) g.speeds.push_back(0.1 * i);
    for (int i = 0; i <= 8; ++i) g.angles.push_back(M_PI * i / 16.0);
    return g;
}
} // namespace

TEST_CASE("parallel sweep matches the serial reference bitwise") {
    const SweepGrid g = paper_grid();
    const auto serial = sg_sweep_serial(g);
    const auto parallel = sg_sweep_parallel(g);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].v == parallel[i].v);
        CHECK(serial[i].theta == parallel[i].theta);
        CHECK(serial[i].expectation_pipeline == parallel[i].expectation_pipeline);
        CHECK(serial[i].expectation_closed_form == parallel[i].expectation_closed_form);
    }
    for (const auto& row : serial) CHECK(row.abs_diff < 1e-10);
    CHECK_THROWS_AS(sg_sweep_serial(SweepGrid{}), Error);
}

TEST_CASE("CSV schema is stable") {
    SweepGrid g;
    g.speeds = {0.6};
    g.angles = {M_PI / 4};
    const std::string csv = sweep_to_csv(sg_sweep_serial(g));
    CHECK(csv.rfind("v,theta,expectation_pipeline,expectation_closed_form,abs_diff\n", 0) == 0);
    CHECK(csv.find("0.6,") != std::string::npos);
    // exactly header + one row
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("equivalence kernels: parallel matches serial bitwise") {
    const double a = equivalence_max_deviation_serial(64, 123);
    const double b = equivalence_max_deviation_parallel(64, 123);
    CHECK(a == b);
    CHECK(a < 1e-12);
}
