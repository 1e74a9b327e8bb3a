#include "spinrdm/sterngerlach.hpp"

#include <cmath>

namespace spinrdm {

Vec3 field_direction(const Vec3& n0, const FourMomentum& p) {
    if (std::abs(n0.norm() - 1.0) > 1e-9) throw NonUnitAxis("field direction must be a unit vector");
    const Vec3 v = p.velocity();
    const double v2 = v.squaredNorm();
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    const double nv = n0.dot(v);
    const Vec3 num = (gamma + 1.0) * n0 - gamma * nv * v;
    return num / (std::sqrt(1.0 - nv * nv) * (gamma + 1.0));
}

SL2CElement rotation_R(const Vec3& n0, const FourMomentum& p) {
    const Vec3 n = field_direction(n0, p);
    const double c = std::clamp(n0.dot(n), -1.0, 1.0);
    if (c < -1.0 + 1e-12)
        throw DegenerateRotation("rest-frame field direction is antipodal to n0");
    const Vec3 cross = n0.cross(n);
    const double s = cross.norm();
    if (s < 1e-14) return SL2CElement();
    return rotation_sl2c(cross / s, std::atan2(s, c));
}

SL2CElement sg_rotation(const Vec3& n0, const FourMomentum& p, double phi) {
    const Vec3 n = field_direction(n0, p);
    const double theta = std::atan2(std::hypot(n(0), n(1)), n(2));
    const double cap_phi = std::atan2(n(1), n(0));
    const SL2CElement rz1 = rotation_sl2c(Vec3(0, 0, 1), cap_phi);
    const SL2CElement ry = rotation_sl2c(Vec3(0, 1, 0), theta);
    const SL2CElement rz2 = rotation_sl2c(Vec3(0, 0, 1), -0.5 * M_PI - phi);
    return rz1 * ry * rz2;
}

SL2CElement planar_rprime(const Vec3& n0, const FourMomentum& p, double phi) {
    if (std::abs(p.p3()(2)) > kTolSingle) throw OutOfPlane("momentum must lie in the x-y plane");
    const bool axis_x = (n0 - Vec3::UnitX()).norm() < 1e-9;
    const bool axis_y = (n0 - Vec3::UnitY()).norm() < 1e-9;
    if (!axis_x && !axis_y) throw NonUnitAxis("planar form requires n0 = x or n0 = y");
    const Vec3 n = field_direction(n0, p);
    const double chi = std::atan2(n(0), n(1)); // cos(chi) = n.y, sin(chi) = n.x
    const cplx i(0.0, 1.0);
    Mat2c m;
    m << std::exp(i * (0.5 * (chi + phi))), i * std::exp(i * (0.5 * (chi - phi))),
         i * std::exp(-i * (0.5 * (chi - phi))), std::exp(-i * (0.5 * (chi + phi)));
    return SL2CElement(std::sqrt(0.5) * m);
}

} // namespace spinrdm
