#include "spinrdm/covariance.hpp"

#include <sstream>

#include "spinrdm/sampling.hpp"

namespace spinrdm {

double projective_su2_distance(const SL2CElement& a, const SL2CElement& b) {
    const double plus = (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
    const double minus = (a.matrix() + b.matrix()).cwiseAbs().maxCoeff();
    return std::min(plus, minus);
}

IndependenceReport momentum_independence(const ComplementarySet& set, const SL2CElement& A,
                                         int samples, uint64_t seed, std::string label) {
    if (samples < 2) throw Error("need at least two momentum samples");
    const SL2CElement a_inv = A.inverse();
    Sampler sampler(seed);
    std::vector<FourMomentum> momenta;
    momenta.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) momenta.push_back(sampler.momentum(set.mass()));

    std::vector<double> devs(momenta.size(), 0.0);
    const WignerRotation reference = wigner_rotation(set, a_inv, momenta[0]);
    const auto n = static_cast<std::ptrdiff_t>(momenta.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 1; i < n; ++i) {
        const WignerRotation w =
            wigner_rotation(set, a_inv, momenta[static_cast<size_t>(i)]);
        devs[static_cast<size_t>(i)] = projective_su2_distance(w.su2(), reference.su2());
    }
    double max_dev = 0.0;
    for (double d : devs) max_dev = std::max(max_dev, d);
    return IndependenceReport{max_dev < kIndependenceThreshold, max_dev, reference,
                              std::move(label)};
}

std::vector<IndependenceReport> invariance_group_scan(
    const ComplementarySet& set, const std::vector<std::pair<std::string, SL2CElement>>& candidates,
    int samples, uint64_t seed) {
    if (candidates.empty()) throw Error("candidate list must be nonempty");
    std::vector<IndependenceReport> out;
    out.reserve(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i)
        out.push_back(momentum_independence(set, candidates[i].second, samples,
                                            seed + 0x9e3779b97f4a7c15ull * (i + 1),
                                            candidates[i].first));
    return out;
}

std::string render_reports(const std::vector<IndependenceReport>& reports) {
    std::ostringstream os;
    os << "transformation                   independent  max_deviation\n";
    for (const auto& r : reports) {
        std::string name = r.label.empty() ? std::string("<unnamed>") : r.label;
        name.resize(32, ' ');
        os << name << ' ' << (r.independent ? "yes" : "no ") << "          ";
        os.precision(3);
        os << std::scientific << r.max_deviation << '\n';
    }
    return os.str();
}

} // namespace spinrdm
