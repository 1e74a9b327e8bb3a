#include "spinrdm/rdm.hpp"

#include <cmath>

namespace spinrdm {

namespace {
double real_after_residue_check(const cplx& z) {
    if (std::abs(z.imag()) > kTolSingle)
        throw Error("trace has a non-negligible imaginary residue");
    return z.real();
}
} // namespace

EffectiveRDM::EffectiveRDM(const Mat2c& matrix, const ComplementarySet& set)
    : m_(matrix), set_(set) {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw Error("effective RDM must be Hermitian");
    if (std::abs(m_.trace().real() - 1.0) > 1e-9)
        throw Error("effective RDM must have unit trace");
    Eigen::SelfAdjointEigenSolver<Mat2c> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw Error("effective RDM must be positive semidefinite");
}

Mat2c Observable::fiber_matrix() const {
    if (!std::isfinite(a0) || !a.allFinite()) throw Error("observable coefficients must be finite");
    return a0 * Mat2c::Identity() + 0.5 * (a(0) * pauli(1) + a(1) * pauli(2) + a(2) * pauli(3));
}

EffectiveRDM effective_rdm(const DensityMatrix& rho, const ComplementarySet& set) {
    const DensityMatrix converted = to_basis(rho, set);
    Mat2c tau = Mat2c::Zero();
    for (size_t i = 0; i < converted.size(); ++i) tau += converted.block(i, i);
    return EffectiveRDM(tau, set);
}

EffectiveRDM naive_partial_trace(const DensityMatrix& rho) {
    if (rho.basis().kind() != ComplementarySet::Kind::Boost)
        throw WrongBasis("naive partial trace is defined in the spin base only");
    Mat2c tau = Mat2c::Zero();
    for (size_t i = 0; i < rho.size(); ++i) tau += rho.block(i, i);
    return EffectiveRDM(tau, rho.basis());
}

double expectation_full(const DensityMatrix& rho, const Observable& obs) {
    const DensityMatrix converted = to_basis(rho, obs.set);
    const Mat2c fiber = obs.fiber_matrix();
    cplx acc = 0.0;
    for (size_t i = 0; i < converted.size(); ++i) acc += (converted.block(i, i) * fiber).trace();
    return real_after_residue_check(acc);
}

double expectation_reduced(const EffectiveRDM& tau, const Observable& obs) {
    if (!tau.set().same_as(obs.set))
        throw SetMismatch("effective RDM and observable belong to different complementary sets");
    return real_after_residue_check((tau.matrix() * obs.fiber_matrix()).trace());
}

} // namespace spinrdm
