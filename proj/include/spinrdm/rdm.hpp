#pragma once

#include "spinrdm/states.hpp"

namespace spinrdm {

/// 2x2 Hermitian PSD unit-trace matrix summarizing all statistics of
/// observables built from the identity and the generators of one fixed
/// complementary set. Tagged with that set; it answers no other questions.
class EffectiveRDM {
  public:
    EffectiveRDM(const Mat2c& matrix, const ComplementarySet& set);

    const Mat2c& matrix() const { return m_; }
    const ComplementarySet& set() const { return set_; }

  private:
    Mat2c m_;
    ComplementarySet set_;
};

/// a0 I + a . G_C for the tagged complementary set.
struct Observable {
    double a0;
    Vec3 a;
    ComplementarySet set;

    /// Fiber matrix a0 I + a.sigma/2.
    Mat2c fiber_matrix() const;
};

/// tau^C: convert rho blockwise to the set's basis, then sum the
/// diagonal-in-momentum blocks.
EffectiveRDM effective_rdm(const DensityMatrix& rho, const ComplementarySet& set);

/// Partial trace over momentum in the spin base: sum of diagonal blocks with
/// no basis conversion. Requires a Boost-tagged rho. Equals
/// effective_rdm(rho, Boost) by construction; kept as an independent code path
/// so the two can check each other.
EffectiveRDM naive_partial_trace(const DensityMatrix& rho);

/// Tr(rho A_C) computed directly on the full (momentum x spin) matrix.
double expectation_full(const DensityMatrix& rho, const Observable& obs);

/// Tr(tau a_C). Throws SetMismatch unless tau and obs carry the same set:
/// an effective RDM only answers questions about observables built from its
/// own complementary set.
double expectation_reduced(const EffectiveRDM& tau, const Observable& obs);

} // namespace spinrdm
