#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinrdm {

/// One verified property: the measured deviation must sit on the stated side
/// of the threshold. Most checks bound a deviation from above; witness checks
/// (where a difference is the point) bound it from below.
struct PropertyResult {
    std::string name;
    int samples;
    double deviation;
    double threshold;
    bool must_exceed = false;
    bool pass = false;
};

std::vector<PropertyResult> verify_lorentz(uint64_t seed);
std::vector<PropertyResult> verify_wigner(uint64_t seed);
std::vector<PropertyResult> verify_rdm(uint64_t seed);
std::vector<PropertyResult> verify_sg(uint64_t seed);
std::vector<PropertyResult> verify_covariance(uint64_t seed);

/// Run a named suite: lorentz | wigner | rdm | sg | covariance | all.
std::vector<PropertyResult> verify_suite(const std::string& suite, uint64_t seed);

std::string render_results(const std::vector<PropertyResult>& results);
bool all_pass(const std::vector<PropertyResult>& results);

} // namespace spinrdm
