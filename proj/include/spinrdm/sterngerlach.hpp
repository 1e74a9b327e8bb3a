#pragma once

#include "spinrdm/lorentz.hpp"

namespace spinrdm {

/// Direction of the apparatus magnetic field as seen in the rest frame of a
/// particle with momentum p, given the laboratory field direction n0:
///   n = [(gamma+1) n0 - gamma (n0.v) v] / (sqrt(1 - (n0.v)^2) (gamma+1)).
/// Reduces to n0 when v = 0 or v is perpendicular to n0.
Vec3 field_direction(const Vec3& n0, const FourMomentum& p);

/// SU(2) rotation whose Lorentz image carries n0 onto field_direction(n0, p).
/// Geodesic policy: axis n0 x n, angle arccos(n0.n). Throws DegenerateRotation
/// if n = -n0, which cannot occur for sub-luminal velocities in this model.
SL2CElement rotation_R(const Vec3& n0, const FourMomentum& p);

/// SU(2) rotation R' whose Lorentz image carries z onto field_direction(n0, p),
/// with the free angle phi threaded explicitly. Fixed as the Euler product
/// R_z(Phi) R_y(Theta) R_z(-pi/2 - phi) where (Theta, Phi) are the spherical
/// angles of the rest-frame field direction. For momenta in the x-y plane this
/// coincides exactly with the explicit planar matrix of planar_rprime.
SL2CElement sg_rotation(const Vec3& n0, const FourMomentum& p, double phi);

/// Explicit planar form of R'(n0, p): for momentum in the x-y plane and n0 in
/// {x, y}, the matrix
///   (sqrt(2)/2) [ e^{i(chi+phi)/2}   i e^{i(chi-phi)/2} ]
///               [ i e^{-i(chi-phi)/2}  e^{-i(chi+phi)/2} ]
/// with cos(chi) = n.y and sin(chi) = n.x. Kept as an independent code path
/// from sg_rotation so the two can check each other.
SL2CElement planar_rprime(const Vec3& n0, const FourMomentum& p, double phi);

} // namespace spinrdm
