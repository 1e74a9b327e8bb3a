#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "spinrdm/lorentz.hpp"

namespace spinrdm {

/// A choice, for each on-shell momentum p, of one SL(2,C) element carrying the
/// rest momentum k = (m,0) to p. The choice fixes how spin labels at different
/// momenta are identified, so states and density matrices carry it as a tag.
///
/// Kinds:
///   Boost        — the pure boost B(p,k); spin base, element(k) = I.
///   SternGerlach — B(p,k) R'(n0, p, phi) with R' from sg_rotation, so that
///                  amplitude (1,0) at p is the +1/2 eigenstate of the spin
///                  component along the rest-frame field direction. At k the
///                  element is the relabeling rotation carrying z to n0, a
///                  little-group element (not the identity unless n0 = z and
///                  phi = -pi/2).
///   Custom       — a user-supplied rule p -> SL(2,C). The defining property
///                  L(C(p,k))k = p is validated lazily on first use per
///                  momentum point; a broken rule raises NotInLittleGroup.
class ComplementarySet {
  public:
    enum class Kind { Boost, SternGerlach, Custom };
    using Rule = std::function<SL2CElement(const FourMomentum&)>;

    static ComplementarySet boost(double mass);
    static ComplementarySet stern_gerlach(double mass, const Vec3& n0, double phi = 0.0);
    static ComplementarySet custom(double mass, Rule rule);

    Kind kind() const { return kind_; }
    double mass() const { return mass_; }
    const Vec3& n0() const { return n0_; }
    double phi() const { return phi_; }

    /// C(p,k) for this set. Throws MassMismatch if p is off this orbit.
    SL2CElement element(const FourMomentum& p) const;

    /// Tag equality: same kind and parameters (Custom: same rule object).
    bool same_as(const ComplementarySet& other) const;

    std::string describe() const;

  private:
    ComplementarySet(Kind kind, double mass) : kind_(kind), mass_(mass) {}

    Kind kind_;
    double mass_;
    Vec3 n0_ = Vec3::UnitZ();
    double phi_ = 0.0;

    struct CustomState {
        Rule rule;
        mutable std::mutex mu;
        mutable std::unordered_set<std::string> validated;
    };
    std::shared_ptr<CustomState> custom_;
};

/// Little-group element of the massive orbit: an SU(2) matrix.
class WignerRotation {
  public:
    explicit WignerRotation(const SL2CElement& m);
    const SL2CElement& su2() const { return m_; }
    const Mat2c& matrix() const { return m_.matrix(); }

  private:
    SL2CElement m_;
};

/// Generalized Wigner rotation C^{-1}(L(A)p, k) A C(p, k).
WignerRotation wigner_rotation(const ComplementarySet& set, const SL2CElement& A,
                               const FourMomentum& p);

/// SU(2) matrix Q with |p,a>^from = sum_b Q_{ba} |p,b>^to,
/// i.e. element(to,p)^{-1} element(from,p).
Mat2c basis_change(const ComplementarySet& from, const ComplementarySet& to,
                   const FourMomentum& p);

/// Matrix of direction . G_set(p) restricted to the momentum-p fiber, in the
/// set's own basis: direction.sigma/2 for spin 1/2.
Mat2c generator_matrix(const ComplementarySet& set, const FourMomentum& p, const Vec3& direction);

/// Fiber dimension; spin fixed at 1/2. Extension point for higher spins.
inline constexpr int kFiberDim = 2;

} // namespace spinrdm
