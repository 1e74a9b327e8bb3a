#include "spinrdm/littlegroup.hpp"

#include <cmath>
#include <sstream>

#include "spinrdm/sterngerlach.hpp"

namespace spinrdm {

namespace {
std::string quantize_key(const FourMomentum& p) {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i)
        os << static_cast<long long>(std::llround(p.p3()(i) / kMomentumQuantum)) << ':';
    return os.str();
}
} // namespace

ComplementarySet ComplementarySet::boost(double mass) {
    if (!(mass > 0.0)) throw Error("mass must be positive");
    return ComplementarySet(Kind::Boost, mass);
}

ComplementarySet ComplementarySet::stern_gerlach(double mass, const Vec3& n0, double phi) {
    if (!(mass > 0.0)) throw Error("mass must be positive");
    if (std::abs(n0.norm() - 1.0) > 1e-9) throw NonUnitAxis("n0 must be a unit vector");
    ComplementarySet s(Kind::SternGerlach, mass);
    s.n0_ = n0;
    s.phi_ = phi;
    return s;
}

ComplementarySet ComplementarySet::custom(double mass, Rule rule) {
    if (!(mass > 0.0)) throw Error("mass must be positive");
    if (!rule) throw Error("custom rule must be callable");
    ComplementarySet s(Kind::Custom, mass);
    s.custom_ = std::make_shared<CustomState>();
    s.custom_->rule = std::move(rule);
    return s;
}

SL2CElement ComplementarySet::element(const FourMomentum& p) const {
    if (std::abs(p.mass() - mass_) > kTolSingle * std::max(1.0, mass_))
        throw MassMismatch("momentum mass does not match the set's orbit");
    switch (kind_) {
        case Kind::Boost:
            return boost_sl2c(p);
        case Kind::SternGerlach:
            return boost_sl2c(p) * sg_rotation(n0_, p, phi_);
        case Kind::Custom: {
            const SL2CElement c = custom_->rule(p);
            const std::string key = quantize_key(p);
            {
                std::lock_guard<std::mutex> lock(custom_->mu);
                if (custom_->validated.count(key)) return c;
            }
            const FourMomentum image = apply_lorentz(c, rest_momentum(mass_));
            if ((image.p3() - p.p3()).cwiseAbs().maxCoeff() > kTolComposed * std::max(1.0, p.energy()))
                throw NotInLittleGroup("custom rule violates L(C(p,k))k = p");
            std::lock_guard<std::mutex> lock(custom_->mu);
            custom_->validated.insert(key);
            return c;
        }
    }
    throw Error("unreachable");
}

bool ComplementarySet::same_as(const ComplementarySet& other) const {
    if (kind_ != other.kind_ || std::abs(mass_ - other.mass_) > kTolSingle) return false;
    switch (kind_) {
        case Kind::Boost:
            return true;
        case Kind::SternGerlach:
            return (n0_ - other.n0_).norm() < 1e-12 && std::abs(phi_ - other.phi_) < 1e-12;
        case Kind::Custom:
            return custom_ == other.custom_;
    }
    return false;
}

std::string ComplementarySet::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Boost:
            os << "boost";
            break;
        case Kind::SternGerlach:
            os << "sg(n0=[" << n0_(0) << "," << n0_(1) << "," << n0_(2) << "],phi=" << phi_ << ")";
            break;
        case Kind::Custom:
            os << "custom@" << custom_.get();
            break;
    }
    return os.str();
}

WignerRotation::WignerRotation(const SL2CElement& m) : m_(m) {
    if (!m.is_su2(1e-9))
        throw NotInLittleGroup("Wigner rotation of a massive orbit must be in SU(2)");
}

WignerRotation wigner_rotation(const ComplementarySet& set, const SL2CElement& A,
                               const FourMomentum& p) {
    const FourMomentum q = apply_lorentz(A, p);
    return WignerRotation(set.element(q).inverse() * A * set.element(p));
}

Mat2c basis_change(const ComplementarySet& from, const ComplementarySet& to,
                   const FourMomentum& p) {
    if (std::abs(from.mass() - to.mass()) > kTolSingle)
        throw MassMismatch("basis change requires sets on the same orbit");
    const Mat2c q = to.element(p).inverse().matrix() * from.element(p).matrix();
    if ((q.adjoint() * q - Mat2c::Identity()).cwiseAbs().maxCoeff() > 1e-9)
        throw NotInLittleGroup("basis change matrix is not SU(2)");
    return q;
}

Mat2c generator_matrix(const ComplementarySet& set, const FourMomentum& p, const Vec3& direction) {
    (void)set;
    (void)p;
    // In its own basis the fiber matrix of direction . G_C(p) is g = sigma/2
    // contracted with direction, for every complementary set.
    return 0.5 * (direction(0) * pauli(1) + direction(1) * pauli(2) + direction(2) * pauli(3));
}

} // namespace spinrdm
