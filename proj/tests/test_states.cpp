#include <doctest.h>

#include "spinrdm/sampling.hpp"
#include "spinrdm/states.hpp"
#include "spinrdm/sterngerlach.hpp"

using namespace spinrdm;

namespace {
const ComplementarySet kBoost = ComplementarySet::boost(1.0);
}

TEST_CASE("pure_state normalization and validation") {
    const FourMomentum p(1.0, Vec3(0.1, 0.2, 0.3));
    const ParticleState one = ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}});
    CHECK(std::abs(one.components()[0].amplitudes(0) - cplx(1, 0)) < 1e-15);

    const ParticleState scaled = ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(2, 0)}});
    CHECK(std::abs(scaled.components()[0].amplitudes(0) - cplx(1, 0)) < 1e-15);

    const FourMomentum q(1.0, Vec3(0.5, 0, 0));
    const ParticleState two =
        ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}, {q, Vec2c(0, 1)}});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(two.components()[0].amplitudes(0) - inv_sqrt2) < 1e-15);
    CHECK(std::abs(two.components()[1].amplitudes(1) - inv_sqrt2) < 1e-15);

    CHECK_THROWS_AS(ParticleState::pure_state(1.0, kBoost, {}), EmptyState);
    CHECK_THROWS_AS(ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(0, 0)}}), ZeroNorm);
    CHECK_THROWS_AS(
        ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}, {p, Vec2c(0, 1)}}),
        DuplicateMomentum);
    CHECK_THROWS_AS(ParticleState::pure_state(2.0, kBoost, {{p, Vec2c(1, 0)}}), MassMismatch);
}

TEST_CASE("to_basis is unitary per momentum") {
    Sampler s(3);
    const ParticleState psi = s.state(1.0, kBoost, 3);
    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, Vec3::UnitY(), 0.9);

    const ParticleState same = to_basis(psi, kBoost);
    for (size_t i = 0; i < psi.components().size(); ++i)
        CHECK((same.components()[i].amplitudes - psi.components()[i].amplitudes).norm() < 1e-15);

    const ParticleState round = to_basis(to_basis(psi, sg), kBoost);
    for (size_t i = 0; i < psi.components().size(); ++i) {
        CHECK((round.components()[i].amplitudes - psi.components()[i].amplitudes).norm() < 1e-12);
        CHECK(std::abs(to_basis(psi, sg).components()[i].amplitudes.norm() -
                       psi.components()[i].amplitudes.norm()) < 1e-12);
    }
}

TEST_CASE("SG eigenstate converted to the spin base is a column of R'") {
    const FourMomentum p =
        FourMomentum::from_velocity(1.0, 0.6 * Vec3(std::cos(M_PI / 4), std::sin(M_PI / 4), 0));
    const ParticleState up = sg_eigenstate(Vec3::UnitX(), p, +1);
    const ParticleState in_boost = to_basis(up, kBoost);
    const Mat2c rp = planar_rprime(Vec3::UnitX(), p, 0.0).matrix();
    CHECK((in_boost.components()[0].amplitudes - rp.col(0)).cwiseAbs().maxCoeff() < 1e-13);

    // eigenvalue check: (n.sigma/2) amplitudes = amplitudes/2 in the spin base
    const Vec3 n = field_direction(Vec3::UnitX(), p);
    const Mat2c gen = generator_matrix(kBoost, p, n);
    const Vec2c a = in_boost.components()[0].amplitudes;
    CHECK((gen * a - 0.5 * a).cwiseAbs().maxCoeff() < 1e-13);

    // orthogonality of the two eigenstates at the same momentum
    const ParticleState down = sg_eigenstate(Vec3::UnitX(), p, -1);
    const Vec2c b = to_basis(down, kBoost).components()[0].amplitudes;
    CHECK(std::abs(a.dot(b)) < 1e-13);

    // at rest it is the ordinary sigma.n0 eigenstate
    const ParticleState rest_up = to_basis(sg_eigenstate(Vec3::UnitX(), rest_momentum(1.0), +1),
                                           kBoost);
    const Vec2c c = rest_up.components()[0].amplitudes;
    CHECK(((0.5 * pauli(1)) * c - 0.5 * c).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("density_of") {
    const FourMomentum p(1.0, Vec3(0, 0, 0.2));
    const DensityMatrix rho1 =
        density_of(ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}}));
    CHECK(std::abs(rho1.block(0, 0)(0, 0) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(rho1.block(0, 0)(1, 1)) < 1e-15);

    Sampler s(43);
    const DensityMatrix rho = density_of(s.state(1.0, kBoost, 3));
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rho.min_eigenvalue() > -1e-12);
    const Eigen::MatrixXcd full = rho.full_matrix();
    CHECK(std::abs((full * full).trace().real() - 1.0) < 1e-12); // purity
}

TEST_CASE("density to_basis commutes with density_of") {
    Sampler s(47);
    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, Vec3::UnitX(), 0.2);
    const ParticleState psi = s.state(1.0, kBoost, 3);
    const DensityMatrix route_a = to_basis(density_of(psi), sg);
    const DensityMatrix route_b = density_of(to_basis(psi, sg));
    for (size_t i = 0; i < route_a.size(); ++i)
        for (size_t j = 0; j < route_a.size(); ++j)
            CHECK((route_a.block(i, j) - route_b.block(i, j)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mix merges momentum grids") {
    const FourMomentum p(1.0, Vec3(0.3, 0, 0));
    const FourMomentum q(1.0, Vec3(0, 0.4, 0));
    const DensityMatrix a = density_of(ParticleState::pure_state(1.0, kBoost, {{p, Vec2c(1, 0)}}));
    const DensityMatrix b = density_of(ParticleState::pure_state(1.0, kBoost, {{q, Vec2c(0, 1)}}));
    const DensityMatrix m = mix({{0.25, a}, {0.75, b}});
    CHECK(m.size() == 2);
    CHECK(m.trace_real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(m.block(0, 0)(0, 0) - 0.25) < 1e-14);
    CHECK(std::abs(m.block(1, 1)(1, 1) - 0.75) < 1e-14);
    CHECK(m.min_eigenvalue() > -1e-14);
}

TEST_CASE("serialization round trip") {
    Sampler s(53);
    const ComplementarySet sg = ComplementarySet::stern_gerlach(1.0, s.unit_vector(), 1.234);
    const ParticleState psi = s.state(1.0, sg, 3);
    const ParticleState back = state_from_text(to_text(psi));
    CHECK(back.basis().same_as(psi.basis()));
    for (size_t i = 0; i < psi.components().size(); ++i) {
        CHECK((back.components()[i].momentum.p3() - psi.components()[i].momentum.p3()).norm() ==
              0.0);
        CHECK((back.components()[i].amplitudes - psi.components()[i].amplitudes).norm() == 0.0);
    }

    const DensityMatrix rho = s.mixed_density(1.0, sg, 2, 2);
    const DensityMatrix rho_back = density_from_text(to_text(rho));
    CHECK(rho_back.size() == rho.size());
    for (size_t i = 0; i < rho.size(); ++i)
        for (size_t j = 0; j < rho.size(); ++j)
            CHECK((rho_back.block(i, j) - rho.block(i, j)).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(state_from_text("garbage"), ParseError);
    const ComplementarySet custom =
        ComplementarySet::custom(1.0, [](const FourMomentum& p) { return boost_sl2c(p); });
    CHECK_THROWS_AS(to_text(s.state(1.0, custom, 1)), Error);
}
