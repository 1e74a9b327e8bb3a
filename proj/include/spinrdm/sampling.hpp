#pragma once

#include <cstdint>
#include <random>

#include "spinrdm/states.hpp"

namespace spinrdm {

/// Seeded generators for verification suites. Momentum sampling is isotropic
/// in direction with rapidity uniform in [0, 3], covering non-relativistic
/// through strongly relativistic regimes.
class Sampler {
  public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    Vec3 unit_vector();
    FourMomentum momentum(double mass, double max_rapidity = 3.0);
    SL2CElement rotation();
    SL2CElement boost(double max_rapidity = 3.0);
    /// Generic SL(2,C) element: boost times rotation.
    SL2CElement sl2c(double max_rapidity = 3.0);
    Vec2c amplitudes();
    /// Random pure state on `n_momenta` distinct momentum points.
    ParticleState state(double mass, const ComplementarySet& basis, int n_momenta);
    /// Random mixed density matrix: convex mixture of `n_pure` pure states,
    /// each on up to `n_momenta` points.
    DensityMatrix mixed_density(double mass, const ComplementarySet& basis, int n_pure,
                                int n_momenta);

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

} // namespace spinrdm
