#pragma once

#include "spinrdm/rdm.hpp"
#include "spinrdm/sterngerlach.hpp"

namespace spinrdm {

/// Stern-Gerlach apparatus: laboratory field direction plus the free angle phi
/// of the R' rotation. phi drops out of every expectation value; it is kept
/// explicit so tests can demonstrate that.
struct SGApparatus {
    Vec3 n0;
    double phi = 0.0;
};

/// Sequential two-apparatus measurement: a particle moving with speed v in the
/// direction (cos theta, sin theta, 0) passes a first apparatus whose outcome
/// selects an eigenstate, then a second apparatus whose expectation is read.
struct SGScenario {
    double mass = 1.0;
    double speed = 0.0;      // v in [0, 1)
    double angle = 0.0;      // theta
    SGApparatus first{Vec3::UnitX(), 0.0};
    SGApparatus second{Vec3::UnitY(), 0.0};
    int selected_eigenvalue_sign = +1;
};

struct ScenarioResult {
    EffectiveRDM tau_second;
    double expectation;
    double closed_form;
};

/// Closed-form expectation of the second (y) apparatus after the first (x)
/// apparatus selected +1/2, for planar motion at speed v and angle theta:
///   -v^2 cos(theta) sin(theta) / (2 sqrt((1 - v^2 cos^2) (1 - v^2 sin^2))).
/// Shares no code with the state/RDM pipeline.
double sg_expectation_closed_form(double v, double theta);

/// Closed-form tau^{C_y} for the same scenario: entries (1 +- nx.ny)/2 on the
/// diagonal and e^{-+ i phi_y} (nx x ny).z / 2 off the diagonal, with
/// nx = n(x, p) and ny = n(y, p) computed from the field-direction formula.
Mat2c tau_cy_closed_form(double v, double theta, double phi_y);

/// Full pipeline: eigenstate of the first apparatus, effective RDM for the
/// second, expectation of sigma_3/2 against it, plus the closed form. Checks
/// the two routes agree to 1e-10.
ScenarioResult run_scenario(const SGScenario& s);

} // namespace spinrdm
