#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinrdm/errors.hpp"

namespace spinrdm {

using Mat2c = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using cplx = std::complex<double>;

/// Pauli matrices sigma_1, sigma_2, sigma_3.
const Mat2c& pauli(int i);

/// On-shell 4-momentum of a massive particle. Energy is derived, never stored,
/// so the mass-shell constraint holds exactly.
class FourMomentum {
  public:
    FourMomentum(double mass, const Vec3& p3);

    /// Momentum of a particle of mass m moving with 3-velocity v (‖v‖ < 1).
    static FourMomentum from_velocity(double mass, const Vec3& v);

    double mass() const { return mass_; }
    const Vec3& p3() const { return p3_; }
    double energy() const { return std::sqrt(p3_.squaredNorm() + mass_ * mass_); }
    Vec3 velocity() const { return p3_ / energy(); }
    Vec4 as_vec4() const;

    bool is_rest(double tol = kTolSingle) const { return p3_.norm() < tol; }

  private:
    double mass_;
    Vec3 p3_;
};

/// Rest-frame fundamental momentum k = (m, 0).
inline FourMomentum rest_momentum(double mass) { return FourMomentum(mass, Vec3::Zero()); }

/// Element of SL(2,C): a 2x2 complex matrix with unit determinant.
class SL2CElement {
  public:
    SL2CElement() : m_(Mat2c::Identity()) {}
    explicit SL2CElement(const Mat2c& m);

    const Mat2c& matrix() const { return m_; }
    SL2CElement inverse() const { return SL2CElement(m_.inverse()); }
    SL2CElement dagger() const { return SL2CElement(m_.adjoint()); }

    bool is_su2(double tol = kTolSingle) const;

    friend SL2CElement operator*(const SL2CElement& a, const SL2CElement& b) {
        return SL2CElement(a.m_ * b.m_);
    }

  private:
    Mat2c m_;
};

/// 4x4 real matrix of a restricted Lorentz transformation
/// (preserves the Minkowski metric, det +1, component (0,0) >= 1).
class LorentzMatrix {
  public:
    LorentzMatrix() : m_(Mat4::Identity()) {}
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}

    const Mat4& matrix() const { return m_; }

    /// Max deviation of Lambda^T eta Lambda from eta.
    double metric_defect() const;

    friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
        return LorentzMatrix(a.m_ * b.m_);
    }

  private:
    Mat4 m_;
};

/// p^0 I + p.sigma. Hermitian with determinant m^2.
Mat2c pauli_map(const FourMomentum& p);

/// The unique restricted Lorentz matrix L(A) with
/// pauli_map(L(A)p) = A pauli_map(p) A^dagger.
LorentzMatrix lorentz_from_sl2c(const SL2CElement& A);

/// Pure boost B(p,k) carrying the rest momentum k = (m,0) to p.
/// Hermitian positive definite; identity at rest.
SL2CElement boost_sl2c(const FourMomentum& p);

/// SU(2) rotation exp(-i angle axis.sigma / 2) about a unit axis.
SL2CElement rotation_sl2c(const Vec3& axis, double angle);

/// Apply L(A) to an on-shell momentum. Mass is preserved exactly.
FourMomentum apply_lorentz(const SL2CElement& A, const FourMomentum& p);

/// Spatial action of L(A) on a 3-vector (A must be in SU(2), so the
/// Lorentz image is a rotation).
Vec3 rotate_vec3(const SL2CElement& A, const Vec3& v);

/// Axis/angle decomposition of an SU(2) element (angle in [0, 2*pi)).
struct AxisAngle {
    Vec3 axis;
    double angle;
};
AxisAngle su2_axis_angle(const SL2CElement& A);

} // namespace spinrdm
