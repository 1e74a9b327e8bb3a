#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinrdm/littlegroup.hpp"

namespace spinrdm {

using Vec2c = Eigen::Vector2cd;

/// Finite superposition over discrete momentum points with spin-1/2 amplitudes,
/// expressed in the basis of one complementary set. Amplitudes at different
/// momenta live in isomorphic but distinct fibers; the API never forms inner
/// products across momenta.
class ParticleState {
  public:
    struct Component {
        FourMomentum momentum;
        Vec2c amplitudes;
    };

    /// Normalized state. Rejects empty input, zero total norm, and momenta
    /// that coincide within the quantization tolerance.
    static ParticleState pure_state(double mass, const ComplementarySet& basis,
                                    std::vector<Component> components);

    double mass() const { return mass_; }
    const ComplementarySet& basis() const { return basis_; }
    const std::vector<Component>& components() const { return components_; }

  private:
    ParticleState(double mass, ComplementarySet basis, std::vector<Component> components)
        : mass_(mass), basis_(std::move(basis)), components_(std::move(components)) {}

    double mass_;
    ComplementarySet basis_;
    std::vector<Component> components_;
};

/// Single-momentum eigenstate of the spin component along the rest-frame field
/// direction n(n0, p), tagged with the SternGerlach(n0, phi) basis.
/// eigenvalue_sign = +1 selects +1/2, -1 selects -1/2.
ParticleState sg_eigenstate(const Vec3& n0, const FourMomentum& p, int eigenvalue_sign,
                            double phi = 0.0);

/// Re-express a state in the basis of another complementary set on the same
/// orbit; per-momentum amplitudes are multiplied by the SU(2) basis-change
/// matrix, so norms are preserved.
ParticleState to_basis(const ParticleState& state, const ComplementarySet& target);

/// Density matrix of a one-particle state over a discrete momentum grid:
/// 2x2 blocks rho(p_i, p_j), Hermitian as a whole, unit trace, PSD.
class DensityMatrix {
  public:
    DensityMatrix(double mass, const ComplementarySet& basis, std::vector<FourMomentum> momenta,
                  std::vector<Mat2c> blocks);

    double mass() const { return mass_; }
    const ComplementarySet& basis() const { return basis_; }
    const std::vector<FourMomentum>& momenta() const { return momenta_; }
    size_t size() const { return momenta_.size(); }
    const Mat2c& block(size_t i, size_t j) const { return blocks_[i * momenta_.size() + j]; }

    /// Full matrix over (momentum x spin) index pairs.
    Eigen::MatrixXcd full_matrix() const;
    double trace_real() const;
    /// Smallest eigenvalue of the full matrix (PSD check).
    double min_eigenvalue() const;

  private:
    double mass_;
    ComplementarySet basis_;
    std::vector<FourMomentum> momenta_;
    std::vector<Mat2c> blocks_;
};

/// rho = |psi><psi| blockwise: blocks(i,j) = a_i a_j^dagger.
DensityMatrix density_of(const ParticleState& state);

/// Blockwise basis conversion: block(i,j) -> Q_i block(i,j) Q_j^dagger with
/// Q_i = basis_change(rho.basis, target, p_i).
DensityMatrix to_basis(const DensityMatrix& rho, const ComplementarySet& target);

/// Convex combination of density matrices sharing mass and basis tag; momentum
/// grids are merged by the quantization key.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts);

// Structured-text serialization. Values are written with shortest
// round-trip decimal encoding; custom-rule bases are not serializable.
std::string to_text(const ParticleState& state);
std::string to_text(const DensityMatrix& rho);
ParticleState state_from_text(const std::string& text);
DensityMatrix density_from_text(const std::string& text);

} // namespace spinrdm
