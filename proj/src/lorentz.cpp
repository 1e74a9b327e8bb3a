#include "spinrdm/lorentz.hpp"

#include <array>
#include <cmath>

namespace spinrdm {

namespace {
const cplx I1(0.0, 1.0);

std::array<Mat2c, 4> make_sigma() {
    std::array<Mat2c, 4> s;
    s[0] = Mat2c::Identity();
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -I1, I1, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

const std::array<Mat2c, 4>& sigma() {
    static const std::array<Mat2c, 4> s = make_sigma();
    return s;
}
} // namespace

const Mat2c& pauli(int i) { return sigma()[static_cast<size_t>(i)]; }

FourMomentum::FourMomentum(double mass, const Vec3& p3) : mass_(mass), p3_(p3) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw Error("mass must be positive and finite");
    if (!p3.allFinite()) throw Error("momentum components must be finite");
}

FourMomentum FourMomentum::from_velocity(double mass, const Vec3& v) {
    const double v2 = v.squaredNorm();
    if (v2 >= 1.0) throw SuperluminalVelocity("‖v‖ must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    return FourMomentum(mass, gamma * mass * v);
}

Vec4 FourMomentum::as_vec4() const {
    Vec4 out;
    out << energy(), p3_(0), p3_(1), p3_(2);
    return out;
}

SL2CElement::SL2CElement(const Mat2c& m) : m_(m) {
    const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det - 1.0) > 1e-9)
        throw NonUnitDeterminant("SL(2,C) element must have unit determinant");
}

bool SL2CElement::is_su2(double tol) const {
    return (m_.adjoint() * m_ - Mat2c::Identity()).cwiseAbs().maxCoeff() < tol;
}

double LorentzMatrix::metric_defect() const {
    Mat4 eta = Mat4::Identity();
    eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
    return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

Mat2c pauli_map(const FourMomentum& p) {
    const Vec3& v = p.p3();
    return p.energy() * sigma()[0] + v(0) * sigma()[1] + v(1) * sigma()[2] + v(2) * sigma()[3];
}

LorentzMatrix lorentz_from_sl2c(const SL2CElement& A) {
    // Lambda^mu_nu = Re Tr(sigma_mu A sigma_nu A^dagger) / 2
    const Mat2c& a = A.matrix();
    Mat4 lam;
    for (int mu = 0; mu < 4; ++mu) {
        const Mat2c left = sigma()[static_cast<size_t>(mu)] * a;
        for (int nu = 0; nu < 4; ++nu) {
            lam(mu, nu) = 0.5 * (left * sigma()[static_cast<size_t>(nu)] * a.adjoint()).trace().real();
        }
    }
    return LorentzMatrix(lam);
}

SL2CElement boost_sl2c(const FourMomentum& p) {
    const double m = p.mass();
    const Mat2c num = m * Mat2c::Identity() + pauli_map(p);
    return SL2CElement(num / std::sqrt(2.0 * m * (p.energy() + m)));
}

SL2CElement rotation_sl2c(const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-9) throw NonUnitAxis("rotation axis must be a unit vector");
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const Mat2c n = axis(0) * sigma()[1] + axis(1) * sigma()[2] + axis(2) * sigma()[3];
    return SL2CElement(c * Mat2c::Identity() - I1 * s * n);
}

FourMomentum apply_lorentz(const SL2CElement& A, const FourMomentum& p) {
    const Mat2c x = A.matrix() * pauli_map(p) * A.matrix().adjoint();
    Vec3 q;
    q(0) = 0.5 * (x * sigma()[1]).trace().real();
    q(1) = 0.5 * (x * sigma()[2]).trace().real();
    q(2) = 0.5 * (x * sigma()[3]).trace().real();
    return FourMomentum(p.mass(), q);
}

Vec3 rotate_vec3(const SL2CElement& A, const Vec3& v) {
    const Mat2c n = v(0) * sigma()[1] + v(1) * sigma()[2] + v(2) * sigma()[3];
    const Mat2c r = A.matrix() * n * A.matrix().adjoint();
    Vec3 out;
    out(0) = 0.5 * (r * sigma()[1]).trace().real();
    out(1) = 0.5 * (r * sigma()[2]).trace().real();
    out(2) = 0.5 * (r * sigma()[3]).trace().real();
    return out;
}

AxisAngle su2_axis_angle(const SL2CElement& A) {
    const Mat2c& m = A.matrix();
    const double c = 0.5 * m.trace().real();                     // cos(angle/2)
    Vec3 b;                                                       // sin(angle/2) * axis
    b(0) = 0.5 * (I1 * (sigma()[1] * m).trace()).real();
    b(1) = 0.5 * (I1 * (sigma()[2] * m).trace()).real();
    b(2) = 0.5 * (I1 * (sigma()[3] * m).trace()).real();
    const double s = b.norm();
    AxisAngle out;
    out.angle = 2.0 * std::atan2(s, c);
    out.axis = (s > 1e-14) ? Vec3(b / s) : Vec3(0, 0, 1);
    return out;
}

} // namespace spinrdm
