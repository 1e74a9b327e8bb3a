#include <doctest.h>

#include "spinrdm/rdm.hpp"
#include "spinrdm/sampling.hpp"
#include "spinrdm/scenario.hpp"
#include "spinrdm/sweep.hpp"

using namespace spinrdm;

namespace {
const ComplementarySet kBoost = ComplementarySet::boost(1.0);
}

TEST_CASE("effective_rdm basics") {
    const FourMomentum p(1.0, Vec3(0.2, 0.1, 0));
    const DensityMatrix rho =
        density_of(ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}}));
    const EffectiveRDM tau = effective_rdm(rho, kBoost);
    CHECK(std::abs(tau.matrix()(0, 0) - cplx(1, 0)) < 1e-14);
    CHECK(std::abs(tau.matrix()(1, 1)) < 1e-14);

    CHECK_THROWS_AS(effective_rdm(rho, ComplementarySet::boost(2.0)), MassMismatch);
}

TEST_CASE("tau^{C_y} for the worked SG scenario matches the closed form") {
    const double v = 0.6, theta = M_PI / 4;
    for (double phi_y : {0.0, M_PI / 3}) {
        SGScenario s;
        s.speed = v;
        s.angle = theta;
        s.second.phi = phi_y;
        const ScenarioResult r = run_scenario(s);
        CHECK((r.tau_second.matrix() - tau_cy_closed_form(v, theta, phi_y)).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("naive partial trace equals effective_rdm in the spin base") {
    Sampler s(61);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = density_of(s.state(1.0, kBoost, 1 + i % 4));
        const EffectiveRDM a = naive_partial_trace(rho);
        const EffectiveRDM b = effective_rdm(rho, kBoost);
        CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(a.matrix().trace().real() - 1.0) < 1e-13);
    }

    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, Vec3::UnitZ(), 0.0);
    const DensityMatrix tagged = density_of(s.state(1.0, sg, 2));
    CHECK_THROWS_AS(naive_partial_trace(tagged), WrongBasis);
}

TEST_CASE("expectation values") {
    Sampler s(67);
    const DensityMatrix rho = s.mixed_density(1.0, kBoost, 2, 3);

    // identity observable
    CHECK(expectation_full(rho, Observable{1.0, Vec3::Zero(), kBoost}) ==
          doctest::Approx(1.0).epsilon(1e-13));

    // single-momentum spin-up along z
    const FourMomentum p(1.0, Vec3(0.4, 0, 0));
    const DensityMatrix up = density_of(ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}}));
    CHECK(expectation_full(up, Observable{0.0, Vec3::UnitZ(), kBoost}) ==
          doctest::Approx(0.5).epsilon(1e-13));

    // maximally mixed tau kills the a-term
    const EffectiveRDM mixed(0.5 * Mat2c::Identity(), kBoost);
    CHECK(expectation_reduced(mixed, Observable{0.7, Vec3(1, 2, 3), kBoost}) ==
          doctest::Approx(0.7).epsilon(1e-13));

    // set mismatch is an error, not a silent conversion
    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, Vec3::UnitY(), 0.0);
    CHECK_THROWS_AS(expectation_reduced(mixed, Observable{0.0, Vec3::UnitZ(), sg}), SetMismatch);
}

TEST_CASE("equivalence theorem over random states, observables, and sets") {
    CHECK(equivalence_max_deviation_serial(200, 97) < 1e-12);
}

TEST_CASE("basis dependence is real for momentum superpositions") {
    const FourMomentum p1(1.0, Vec3(0.9, 0, 0));
    const FourMomentum p2(1.0, Vec3(0, 1.4, 0));
    const DensityMatrix rho = density_of(ParticleState::pure_state(
        1.0, kBoost, {{p1, Vec2c(1, 0)}, {p2, Vec2c(0.6, cplx(0.0, 0.8))}}));
    const EffectiveRDM tau_b = effective_rdm(rho, kBoost);
    const EffectiveRDM tau_y =
        effective_rdm(rho, ComplementarySet::stern_gerlach(1.0, Vec3::UnitY()));
    CHECK((tau_b.matrix() - tau_y.matrix()).cwiseAbs().maxCoeff() > 1e-3);
    // both are still valid density matrices
    for (const EffectiveRDM* tau : {&tau_b, &tau_y}) {
        CHECK(std::abs(tau->matrix().trace().real() - 1.0) < 1e-13);
        Eigen::SelfAdjointEigenSolver<Mat2c> es(tau->matrix(), Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > -1e-12);
    }
}

TEST_CASE("momentum eigenstates: taus of different sets are unitarily related") {
    Sampler s(71);
    const FourMomentum p = s.momentum(1.0);
    const DensityMatrix rho =
        density_of(ParticleState::pure_state(1.0, kBoost, {{p, s.amplitudes()}}));
    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, s.unit_vector(), 0.4);
    const EffectiveRDM tau_b = effective_rdm(rho, kBoost);
    const EffectiveRDM tau_s = effective_rdm(rho, sg);
    const Mat2c q = basis_change(kBoost, sg, p);
    CHECK((q * tau_b.matrix() * q.adjoint() - tau_s.matrix()).cwiseAbs().maxCoeff() < 1e-13);
}
