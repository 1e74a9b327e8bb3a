#include "spinrdm/sampling.hpp"

#include <cmath>

namespace spinrdm {

double Sampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vec3 Sampler::unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double az = uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec3(r * std::cos(az), r * std::sin(az), z);
}

FourMomentum Sampler::momentum(double mass, double max_rapidity) {
    const double rap = uniform(0.0, max_rapidity);
    return FourMomentum(mass, mass * std::sinh(rap) * unit_vector());
}

SL2CElement Sampler::rotation() {
    return rotation_sl2c(unit_vector(), uniform(0.0, 2.0 * M_PI));
}

SL2CElement Sampler::boost(double max_rapidity) {
    const double rap = uniform(0.1, max_rapidity);
    const FourMomentum target(1.0, std::sinh(rap) * unit_vector());
    return boost_sl2c(target);
}

SL2CElement Sampler::sl2c(double max_rapidity) { return boost(max_rapidity) * rotation(); }

Vec2c Sampler::amplitudes() {
    Vec2c a(cplx(uniform(-1, 1), uniform(-1, 1)), cplx(uniform(-1, 1), uniform(-1, 1)));
    if (a.norm() < 1e-3) a = Vec2c(1, 0);
    return a;
}

ParticleState Sampler::state(double mass, const ComplementarySet& basis, int n_momenta) {
    std::vector<ParticleState::Component> comps;
    for (int i = 0; i < n_momenta; ++i) {
        // retry on (astronomically unlikely) quantization collisions
        for (int attempt = 0; attempt < 16; ++attempt) {
            try {
                auto trial = comps;
                trial.push_back({momentum(mass), amplitudes()});
                ParticleState::pure_state(mass, basis, trial);
                comps = std::move(trial);
                break;
            } catch (const DuplicateMomentum&) {
            }
        }
    }
    return ParticleState::pure_state(mass, basis, std::move(comps));
}

DensityMatrix Sampler::mixed_density(double mass, const ComplementarySet& basis, int n_pure,
                                     int n_momenta) {
    std::vector<std::pair<double, DensityMatrix>> parts;
    for (int i = 0; i < n_pure; ++i)
        parts.emplace_back(uniform(0.1, 1.0), density_of(state(mass, basis, n_momenta)));
    return mix(parts);
}

} // namespace spinrdm
