#include <doctest.h>

#include "spinrdm/lorentz.hpp"
#include "spinrdm/sampling.hpp"

using namespace spinrdm;

namespace {
// Independent 3x3 rotation via the Rodrigues formula, used as an oracle for
// the Lorentz image of SU(2) rotations.
Eigen::Matrix3d rodrigues(const Vec3& axis, double angle) {
    Eigen::Matrix3d k;
    k << 0, -axis(2), axis(1), axis(2), 0, -axis(0), -axis(1), axis(0), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1 - std::cos(angle)) * k * k;
}
} // namespace

TEST_CASE("four-momentum basics") {
    const FourMomentum rest(1.0, Vec3::Zero());
    CHECK(rest.energy() == doctest::Approx(1.0).epsilon(1e-15));

    const FourMomentum p(1.0, Vec3(0, 0, 0.75));
    CHECK(p.energy() == doctest::Approx(1.25).epsilon(1e-15));

    CHECK_THROWS_AS(FourMomentum(-1.0, Vec3::Zero()), Error);
    CHECK_THROWS_AS(FourMomentum::from_velocity(1.0, Vec3(0, 0, 1.0)), SuperluminalVelocity);
    CHECK_THROWS_AS(FourMomentum::from_velocity(1.0, Vec3(0.8, 0.8, 0)), SuperluminalVelocity);
}

TEST_CASE("pauli map") {
    const Mat2c at_rest = pauli_map(rest_momentum(1.0));
    CHECK((at_rest - Mat2c::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const FourMomentum p(1.0, Vec3(0, 0, 0.75));
    const Mat2c x = pauli_map(p);
    CHECK(std::abs(x(0, 0) - cplx(2.0, 0)) < 1e-15);
    CHECK(std::abs(x(1, 1) - cplx(0.5, 0)) < 1e-15);
    CHECK(std::abs(x(0, 1)) < 1e-15);

    Sampler s(7);
    for (int i = 0; i < 20; ++i) {
        const double m = s.uniform(0.5, 3.0);
        const FourMomentum q = s.momentum(m);
        const Mat2c xq = pauli_map(q);
        const cplx det = xq(0, 0) * xq(1, 1) - xq(0, 1) * xq(1, 0);
        CHECK(std::abs(det - m * m) < 1e-12 * m * m);
    }
}

TEST_CASE("lorentz_from_sl2c") {
    CHECK((lorentz_from_sl2c(SL2CElement()).matrix() - Mat4::Identity()).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK_THROWS_AS(SL2CElement(2.0 * Mat2c::Identity()), NonUnitDeterminant);

    // SU(2) rotation about z maps to the spatial rotation block
    const double phi = 0.9;
    const LorentzMatrix lam = lorentz_from_sl2c(rotation_sl2c(Vec3::UnitZ(), phi));
    const Eigen::Matrix3d r = rodrigues(Vec3::UnitZ(), phi);
    CHECK((lam.matrix().block<3, 3>(1, 1) - r).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(lam.matrix()(0, 0) - 1.0) < 1e-14);
    CHECK(lam.matrix().row(0).tail(3).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(lam.matrix().col(0).tail(3).cwiseAbs().maxCoeff() < 1e-14);

    Sampler s(11);
    for (int i = 0; i < 100; ++i) {
        const SL2CElement a = s.sl2c();
        const SL2CElement b = s.sl2c();
        CHECK((lorentz_from_sl2c(a * b).matrix() -
               (lorentz_from_sl2c(a) * lorentz_from_sl2c(b)).matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        CHECK(lorentz_from_sl2c(a).metric_defect() < 1e-12);
        // double cover
        const SL2CElement neg(-a.matrix());
        CHECK((lorentz_from_sl2c(a).matrix() - lorentz_from_sl2c(neg).matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("boost_sl2c") {
    CHECK((boost_sl2c(rest_momentum(1.0)).matrix() - Mat2c::Identity()).cwiseAbs().maxCoeff() <
          1e-15);

    const FourMomentum p(1.0, Vec3(0, 0, 0.75));
    const Mat2c b = boost_sl2c(p).matrix();
    CHECK(std::abs(b(0, 0) - 3.0 / std::sqrt(4.5)) < 1e-14);
    CHECK(std::abs(b(1, 1) - 1.5 / std::sqrt(4.5)) < 1e-14);

    Sampler s(13);
    for (int i = 0; i < 100; ++i) {
        const double m = s.uniform(0.5, 2.0);
        const FourMomentum q = s.momentum(m);
        const FourMomentum image = apply_lorentz(boost_sl2c(q), rest_momentum(m));
        CHECK((image.p3() - q.p3()).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, q.energy()));
        // Hermitian positive definite
        const Mat2c bm = boost_sl2c(q).matrix();
        CHECK((bm - bm.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
        Eigen::SelfAdjointEigenSolver<Mat2c> es(bm, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("rotation_sl2c") {
    CHECK((rotation_sl2c(Vec3::UnitX(), 0.0).matrix() - Mat2c::Identity()).cwiseAbs().maxCoeff() <
          1e-15);
    // 2*pi gives -identity in SU(2), identity downstairs
    const SL2CElement full = rotation_sl2c(Vec3(0, 1, 0), 2 * M_PI);
    CHECK((full.matrix() + Mat2c::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((lorentz_from_sl2c(full).matrix() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);

    const Mat2c rz = rotation_sl2c(Vec3::UnitZ(), M_PI / 2).matrix();
    CHECK(std::abs(rz(0, 0) - std::exp(cplx(0, -M_PI / 4))) < 1e-15);
    CHECK(std::abs(rz(1, 1) - std::exp(cplx(0, M_PI / 4))) < 1e-15);
    CHECK(std::abs(rz(0, 1)) < 1e-15);

    CHECK_THROWS_AS(rotation_sl2c(Vec3(1, 1, 0), 0.5), NonUnitAxis);

    Sampler s(17);
    for (int i = 0; i < 50; ++i) {
        const Vec3 axis = s.unit_vector();
        const double angle = s.uniform(0, 2 * M_PI);
        const SL2CElement r = rotation_sl2c(axis, angle);
        CHECK(r.is_su2());
        CHECK((lorentz_from_sl2c(r).matrix().block<3, 3>(1, 1) - rodrigues(axis, angle))
                  .cwiseAbs()
                  .maxCoeff() < 1e-13);
    }
}

TEST_CASE("apply_lorentz keeps the orbit") {
    Sampler s(19);
    const FourMomentum p = s.momentum(1.0);
    CHECK((apply_lorentz(SL2CElement(), p).p3() - p.p3()).norm() < 1e-15);
    for (int i = 0; i < 100; ++i) {
        const FourMomentum q = apply_lorentz(s.sl2c(), p);
        CHECK(std::abs(q.energy() * q.energy() - q.p3().squaredNorm() - 1.0) < 1e-12);
    }
}

TEST_CASE("axis-angle decomposition round trip") {
    Sampler s(23);
    for (int i = 0; i < 50; ++i) {
        const Vec3 axis = s.unit_vector();
        const double angle = s.uniform(0.1, 2 * M_PI - 0.1);
        const AxisAngle aa = su2_axis_angle(rotation_sl2c(axis, angle));
        CHECK((rotation_sl2c(aa.axis, aa.angle).matrix() - rotation_sl2c(axis, angle).matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}
