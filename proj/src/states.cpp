#include "spinrdm/states.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace spinrdm {

namespace {

std::string fmt_d(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::array<long long, 3> quantized(const FourMomentum& p) {
    return {static_cast<long long>(std::llround(p.p3()(0) / kMomentumQuantum)),
            static_cast<long long>(std::llround(p.p3()(1) / kMomentumQuantum)),
            static_cast<long long>(std::llround(p.p3()(2) / kMomentumQuantum))};
}

void check_mass(double a, double b, const char* what) {
    if (std::abs(a - b) > kTolSingle * std::max(1.0, a)) throw MassMismatch(what);
}

void write_basis(std::ostringstream& os, const ComplementarySet& basis) {
    switch (basis.kind()) {
        case ComplementarySet::Kind::Boost:
            os << "basis boost\n";
            break;
        case ComplementarySet::Kind::SternGerlach:
            os << "basis sg " << fmt_d(basis.n0()(0)) << ' ' << fmt_d(basis.n0()(1)) << ' '
               << fmt_d(basis.n0()(2)) << ' ' << fmt_d(basis.phi()) << '\n';
            break;
        case ComplementarySet::Kind::Custom:
            throw Error("custom-rule bases are not serializable");
    }
}

ComplementarySet read_basis(std::istringstream& is, double mass) {
    std::string tag, kind;
    is >> tag >> kind;
    if (tag != "basis") throw ParseError("expected 'basis' line");
    if (kind == "boost") return ComplementarySet::boost(mass);
    if (kind == "sg") {
        Vec3 n0;
        double phi;
        is >> n0(0) >> n0(1) >> n0(2) >> phi;
        if (!is) throw ParseError("malformed sg basis descriptor");
        return ComplementarySet::stern_gerlach(mass, n0, phi);
    }
    throw ParseError("unknown basis kind: " + kind);
}

} // namespace

ParticleState ParticleState::pure_state(double mass, const ComplementarySet& basis,
                                        std::vector<Component> components) {
    if (components.empty()) throw EmptyState("state needs at least one momentum component");
    check_mass(mass, basis.mass(), "state mass does not match basis orbit");
    std::map<std::array<long long, 3>, int> seen;
    double norm2 = 0.0;
    for (const auto& c : components) {
        check_mass(mass, c.momentum.mass(), "component momentum off the orbit");
        if (!c.amplitudes.allFinite()) throw Error("amplitudes must be finite");
        if (++seen[quantized(c.momentum)] > 1)
            throw DuplicateMomentum("two components share a momentum point");
        norm2 += c.amplitudes.squaredNorm();
    }
    if (norm2 < 1e-300) throw ZeroNorm("state has zero total norm");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& c : components) c.amplitudes *= scale;
    return ParticleState(mass, basis, std::move(components));
}

ParticleState sg_eigenstate(const Vec3& n0, const FourMomentum& p, int eigenvalue_sign,
                            double phi) {
    if (eigenvalue_sign != 1 && eigenvalue_sign != -1)
        throw Error("eigenvalue sign must be +1 or -1");
    Vec2c amp = (eigenvalue_sign > 0) ? Vec2c(1, 0) : Vec2c(0, 1);
    return ParticleState::pure_state(p.mass(),
                                     ComplementarySet::stern_gerlach(p.mass(), n0, phi),
                                     {{p, amp}});
}

ParticleState to_basis(const ParticleState& state, const ComplementarySet& target) {
    if (target.same_as(state.basis())) return state;
    std::vector<ParticleState::Component> out = state.components();
    for (auto& c : out) c.amplitudes = basis_change(state.basis(), target, c.momentum) * c.amplitudes;
    return ParticleState::pure_state(state.mass(), target, std::move(out));
}

DensityMatrix::DensityMatrix(double mass, const ComplementarySet& basis,
                             std::vector<FourMomentum> momenta, std::vector<Mat2c> blocks)
    : mass_(mass), basis_(basis), momenta_(std::move(momenta)), blocks_(std::move(blocks)) {
    if (momenta_.empty()) throw EmptyState("density matrix needs at least one momentum");
    if (blocks_.size() != momenta_.size() * momenta_.size())
        throw Error("block count must be n^2");
    check_mass(mass_, basis.mass(), "density matrix mass does not match basis orbit");
    const size_t n = momenta_.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if ((blocks_[i * n + j] - blocks_[j * n + i].adjoint()).cwiseAbs().maxCoeff() > 1e-9)
                throw Error("density matrix must be Hermitian blockwise");
    if (std::abs(trace_real() - 1.0) > 1e-9) throw Error("density matrix must have unit trace");
}

Eigen::MatrixXcd DensityMatrix::full_matrix() const {
    const size_t n = momenta_.size();
    Eigen::MatrixXcd full(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            full.block<2, 2>(2 * static_cast<Eigen::Index>(i), 2 * static_cast<Eigen::Index>(j)) =
                block(i, j);
    return full;
}

double DensityMatrix::trace_real() const {
    double t = 0.0;
    for (size_t i = 0; i < momenta_.size(); ++i) t += block(i, i).trace().real();
    return t;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(full_matrix(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix density_of(const ParticleState& state) {
    const auto& comps = state.components();
    const size_t n = comps.size();
    std::vector<FourMomentum> momenta;
    momenta.reserve(n);
    for (const auto& c : comps) momenta.push_back(c.momentum);
    std::vector<Mat2c> blocks(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            blocks[i * n + j] = comps[i].amplitudes * comps[j].amplitudes.adjoint();
    return DensityMatrix(state.mass(), state.basis(), std::move(momenta), std::move(blocks));
}

DensityMatrix to_basis(const DensityMatrix& rho, const ComplementarySet& target) {
    if (target.same_as(rho.basis())) return rho;
    const size_t n = rho.size();
    std::vector<Mat2c> q(n);
    for (size_t i = 0; i < n; ++i) q[i] = basis_change(rho.basis(), target, rho.momenta()[i]);
    std::vector<Mat2c> blocks(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            blocks[i * n + j] = q[i] * rho.block(i, j) * q[j].adjoint();
    return DensityMatrix(rho.mass(), target, rho.momenta(), std::move(blocks));
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts) {
    if (parts.empty()) throw EmptyState("mix needs at least one density matrix");
    const double mass = parts.front().second.mass();
    const ComplementarySet& basis = parts.front().second.basis();
    double total = 0.0;
    std::map<std::array<long long, 3>, size_t> index;
    std::vector<FourMomentum> momenta;
    for (const auto& [w, rho] : parts) {
        if (!(w > 0.0)) throw Error("mixture weights must be positive");
        if (!basis.same_as(rho.basis())) throw SetMismatch("mixture parts must share a basis tag");
        check_mass(mass, rho.mass(), "mixture parts must share a mass");
        total += w;
        for (const auto& p : rho.momenta())
            if (index.emplace(quantized(p), momenta.size()).second) momenta.push_back(p);
    }
    const size_t n = momenta.size();
    std::vector<Mat2c> blocks(n * n, Mat2c::Zero());
    for (const auto& [w, rho] : parts) {
        std::vector<size_t> map(rho.size());
        for (size_t i = 0; i < rho.size(); ++i) map[i] = index.at(quantized(rho.momenta()[i]));
        for (size_t i = 0; i < rho.size(); ++i)
            for (size_t j = 0; j < rho.size(); ++j)
                blocks[map[i] * n + map[j]] += (w / total) * rho.block(i, j);
    }
    return DensityMatrix(mass, basis, std::move(momenta), std::move(blocks));
}

std::string to_text(const ParticleState& state) {
    std::ostringstream os;
    os << "spinrdm-state v1\n";
    os << "mass " << fmt_d(state.mass()) << '\n';
    write_basis(os, state.basis());
    os << "points " << state.components().size() << '\n';
    for (const auto& c : state.components()) {
        os << fmt_d(c.momentum.p3()(0)) << ' ' << fmt_d(c.momentum.p3()(1)) << ' '
           << fmt_d(c.momentum.p3()(2));
        for (int a = 0; a < 2; ++a)
            os << ' ' << fmt_d(c.amplitudes(a).real()) << ' ' << fmt_d(c.amplitudes(a).imag());
        os << '\n';
    }
    return os.str();
}

std::string to_text(const DensityMatrix& rho) {
    std::ostringstream os;
    os << "spinrdm-density v1\n";
    os << "mass " << fmt_d(rho.mass()) << '\n';
    write_basis(os, rho.basis());
    os << "momenta " << rho.size() << '\n';
    for (const auto& p : rho.momenta())
        os << fmt_d(p.p3()(0)) << ' ' << fmt_d(p.p3()(1)) << ' ' << fmt_d(p.p3()(2)) << '\n';
    os << "blocks\n";
    for (size_t i = 0; i < rho.size(); ++i)
        for (size_t j = 0; j < rho.size(); ++j) {
            os << i << ' ' << j;
            const Mat2c& b = rho.block(i, j);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    os << ' ' << fmt_d(b(r, c).real()) << ' ' << fmt_d(b(r, c).imag());
            os << '\n';
        }
    return os.str();
}

ParticleState state_from_text(const std::string& text) {
    std::istringstream whole(text);
    std::string magic, version, tag;
    whole >> magic >> version;
    if (magic != "spinrdm-state" || version != "v1") throw ParseError("bad state header");
    double mass;
    whole >> tag >> mass;
    if (tag != "mass" || !whole) throw ParseError("expected mass line");
    ComplementarySet basis = read_basis(whole, mass);
    size_t n;
    whole >> tag >> n;
    if (tag != "points" || !whole) throw ParseError("expected points line");
    std::vector<ParticleState::Component> comps;
    for (size_t i = 0; i < n; ++i) {
        Vec3 p3;
        double re0, im0, re1, im1;
        whole >> p3(0) >> p3(1) >> p3(2) >> re0 >> im0 >> re1 >> im1;
        if (!whole) throw ParseError("truncated state point row");
        comps.push_back({FourMomentum(mass, p3), Vec2c(cplx(re0, im0), cplx(re1, im1))});
    }
    return ParticleState::pure_state(mass, basis, std::move(comps));
}

DensityMatrix density_from_text(const std::string& text) {
    std::istringstream whole(text);
    std::string magic, version, tag;
    whole >> magic >> version;
    if (magic != "spinrdm-density" || version != "v1") throw ParseError("bad density header");
    double mass;
    whole >> tag >> mass;
    if (tag != "mass" || !whole) throw ParseError("expected mass line");
    ComplementarySet basis = read_basis(whole, mass);
    size_t n;
    whole >> tag >> n;
    if (tag != "momenta" || !whole) throw ParseError("expected momenta line");
    std::vector<FourMomentum> momenta;
    for (size_t i = 0; i < n; ++i) {
        Vec3 p3;
        whole >> p3(0) >> p3(1) >> p3(2);
        if (!whole) throw ParseError("truncated momentum row");
        momenta.push_back(FourMomentum(mass, p3));
    }
    whole >> tag;
    if (tag != "blocks") throw ParseError("expected blocks section");
    std::vector<Mat2c> blocks(n * n, Mat2c::Zero());
    for (size_t count = 0; count < n * n; ++count) {
        size_t i, j;
        whole >> i >> j;
        if (!whole || i >= n || j >= n) throw ParseError("bad block indices");
        Mat2c b;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                double re, im;
                whole >> re >> im;
                if (!whole) throw ParseError("truncated block row");
                b(r, c) = cplx(re, im);
            }
        blocks[i * n + j] = b;
    }
    return DensityMatrix(mass, basis, std::move(momenta), std::move(blocks));
}

} // namespace spinrdm
