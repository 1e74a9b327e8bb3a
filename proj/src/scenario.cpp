#include "spinrdm/scenario.hpp"

#include <cmath>

namespace spinrdm {

double sg_expectation_closed_form(double v, double theta) {
    if (!(v >= 0.0) || v >= 1.0) throw SuperluminalVelocity("speed must be in [0, 1)");
    const double c = std::cos(theta), s = std::sin(theta);
    const double v2 = v * v;
    return -v2 * c * s / (2.0 * std::sqrt((1.0 - v2 * c * c) * (1.0 - v2 * s * s)));
}

Mat2c tau_cy_closed_form(double v, double theta, double phi_y) {
    if (!(v >= 0.0) || v >= 1.0) throw SuperluminalVelocity("speed must be in [0, 1)");
    const Vec3 vel = v * Vec3(std::cos(theta), std::sin(theta), 0.0);
    const FourMomentum p = FourMomentum::from_velocity(1.0, vel);
    const Vec3 nx = field_direction(Vec3::UnitX(), p);
    const Vec3 ny = field_direction(Vec3::UnitY(), p);
    const double dot = nx.dot(ny);
    const double crossz = nx.cross(ny).dot(Vec3::UnitZ());
    const cplx i(0.0, 1.0);
    Mat2c tau;
    tau << 1.0 + dot, std::exp(-i * phi_y) * crossz,
           std::exp(i * phi_y) * crossz, 1.0 - dot;
    return 0.5 * tau;
}

ScenarioResult run_scenario(const SGScenario& s) {
    if (!(s.speed >= 0.0) || s.speed >= 1.0) throw SuperluminalVelocity("speed must be in [0, 1)");
    const Vec3 vel = s.speed * Vec3(std::cos(s.angle), std::sin(s.angle), 0.0);
    const FourMomentum p = FourMomentum::from_velocity(s.mass, vel);

    const ParticleState psi = sg_eigenstate(s.first.n0, p, s.selected_eigenvalue_sign, s.first.phi);
    const ComplementarySet second_set =
        ComplementarySet::stern_gerlach(s.mass, s.second.n0, s.second.phi);
    EffectiveRDM tau = effective_rdm(density_of(psi), second_set);
    const Observable g3{0.0, Vec3::UnitZ(), second_set};
    const double expectation = expectation_reduced(tau, g3);

    const bool canonical = (s.first.n0 - Vec3::UnitX()).norm() < 1e-12 &&
                           (s.second.n0 - Vec3::UnitY()).norm() < 1e-12 &&
                           s.selected_eigenvalue_sign == +1;
    double closed;
    if (canonical) {
        closed = sg_expectation_closed_form(s.speed, s.angle);
    } else {
        // Geometric form: the outcome is set by the angle between the two
        // rest-frame field directions.
        const Vec3 n1 = field_direction(s.first.n0, p);
        const Vec3 n2 = field_direction(s.second.n0, p);
        closed = 0.5 * s.selected_eigenvalue_sign * n1.dot(n2);
    }
    if (std::abs(expectation - closed) > kTolComposed)
        throw Error("pipeline and closed-form expectations disagree");
    return ScenarioResult{std::move(tau), expectation, closed};
}

} // namespace spinrdm
