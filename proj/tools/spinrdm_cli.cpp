// Command-line front end: Stern-Gerlach expectation sweeps, the verification
// suites, and direct Wigner-rotation inspection.
//
// Exit codes: 0 pass, 1 property/validation failure, 2 usage or config error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spinrdm/covariance.hpp"
#include "spinrdm/sampling.hpp"
#include "spinrdm/sweep.hpp"
#include "spinrdm/verify.hpp"

using namespace spinrdm;

namespace {

std::vector<double> parse_values(const std::string& text) {
    // either "a,b,c" or "min:max:step"
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::istringstream is(text);
        double lo, hi, step;
        char c1, c2;
        is >> lo >> c1 >> hi >> c2 >> step;
        if (!is || c1 != ':' || c2 != ':' || !(step > 0))
            throw ParseError("bad range: " + text);
        for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

struct SweepConfig {
    SweepGrid grid;
    std::string out_path;
};

SweepConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config: " + path);
    SweepConfig cfg;
    bool have_v = false, have_theta = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "mass") cfg.grid.mass = std::stod(value);
        else if (key == "v") { cfg.grid.speeds = parse_values(value); have_v = true; }
        else if (key == "theta") { cfg.grid.angles = parse_values(value); have_theta = true; }
        else if (key == "phi_x") cfg.grid.phi_x = std::stod(value);
        else if (key == "phi_y") cfg.grid.phi_y = std::stod(value);
        else if (key == "out") cfg.out_path = value;
        else throw ParseError("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
    if (!have_v || !have_theta || cfg.grid.speeds.empty() || cfg.grid.angles.empty())
        throw ParseError("config must define nonempty v and theta grids");
    if (!(cfg.grid.mass > 0)) throw ParseError("mass must be positive");
    for (double v : cfg.grid.speeds)
        if (v < 0.0 || v >= 1.0) throw ParseError("v values must lie in [0, 1)");
    return cfg;
}

int run_sweep(const std::string& config_path, const std::string& out_override) {
    SweepConfig cfg;
    try {
        cfg = parse_config(config_path);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    if (!out_override.empty()) cfg.out_path = out_override;
    const std::vector<SweepRow> rows = sg_sweep_parallel(cfg.grid);
    const std::string csv = sweep_to_csv(rows);
    if (cfg.out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "cannot write " << cfg.out_path << '\n';
            return 2;
        }
        out << csv;
    }
    for (const auto& r : rows) {
        if (r.abs_diff >= 1e-10) {
            std::cerr << "validation failure at v=" << r.v << " theta=" << r.theta
                      << " abs_diff=" << r.abs_diff << '\n';
            return 1;
        }
    }
    return 0;
}

int run_verify(const std::string& suite, uint64_t seed) {
    std::vector<PropertyResult> results;
    try {
        results = verify_suite(suite, seed);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    std::cout << "suite: " << suite << "  seed: " << seed << '\n';
    std::cout << render_results(results);
    if (suite == "covariance" || suite == "all") {
        const ComplementarySet boost_set = ComplementarySet::boost(1.0);
        std::vector<std::pair<std::string, SL2CElement>> rotations;
        rotations.emplace_back("rot(x, pi/7)", rotation_sl2c(Vec3::UnitX(), M_PI / 7));
        rotations.emplace_back("rot(y, 1.0)", rotation_sl2c(Vec3::UnitY(), 1.0));
        rotations.emplace_back("rot(z, 2.0)", rotation_sl2c(Vec3::UnitZ(), 2.0));
        rotations.emplace_back("boost(z, rapidity 1)",
                               boost_sl2c(FourMomentum(1.0, std::sinh(1.0) * Vec3::UnitZ())));
        std::cout << "\nboost-set scan:\n"
                  << render_reports(invariance_group_scan(boost_set, rotations, 40, seed));
    }
    return all_pass(results) ? 0 : 1;
}

Vec3 parse_axis(const std::string& s) {
    if (s == "x") return Vec3::UnitX();
    if (s == "y") return Vec3::UnitY();
    if (s == "z") return Vec3::UnitZ();
    std::istringstream is(s);
    Vec3 v;
    char c1, c2;
    is >> v(0) >> c1 >> v(1) >> c2 >> v(2);
    if (!is || c1 != ',' || c2 != ',') throw ParseError("bad axis: " + s);
    if (v.norm() < 1e-12) throw ParseError("axis must be nonzero");
    return v.normalized();
}

ComplementarySet parse_set(const std::string& s, double mass) {
    if (s == "boost") return ComplementarySet::boost(mass);
    if (s.rfind("sg:", 0) == 0) {
        const auto rest = s.substr(3);
        const auto colon = rest.find(':');
        const Vec3 axis = parse_axis(colon == std::string::npos ? rest : rest.substr(0, colon));
        const double phi = colon == std::string::npos ? 0.0 : std::stod(rest.substr(colon + 1));
        return ComplementarySet::stern_gerlach(mass, axis, phi);
    }
    throw ParseError("bad set descriptor: " + s + " (want boost | sg:<axis>[:<phi>])");
}

SL2CElement parse_transform(const std::string& s) {
    const auto first = s.find(':');
    const auto second = s.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw ParseError("bad transform: " + s + " (want rot:<axis>:<angle> | boost:<axis>:<rapidity>)");
    const std::string kind = s.substr(0, first);
    const Vec3 axis = parse_axis(s.substr(first + 1, second - first - 1));
    const double value = std::stod(s.substr(second + 1));
    if (kind == "rot") return rotation_sl2c(axis, value);
    if (kind == "boost") return boost_sl2c(FourMomentum(1.0, std::sinh(value) * axis));
    throw ParseError("unknown transform kind: " + kind);
}

int run_wigner(const std::string& set_desc, const std::string& a_desc, double mass,
               double px, double py, double pz) {
    const ComplementarySet set = parse_set(set_desc, mass);
    const SL2CElement a = parse_transform(a_desc);
    const FourMomentum p(mass, Vec3(px, py, pz));
    const WignerRotation w = wigner_rotation(set, a, p);
    std::cout.precision(12);
    const Mat2c& m = w.matrix();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c)
            std::cout << '(' << m(r, c).real() << (m(r, c).imag() < 0 ? "" : "+") << m(r, c).imag()
                      << "i)" << (c == 0 ? "  " : "\n");
    }
    const AxisAngle aa = su2_axis_angle(w.su2());
    std::cout << "axis  [" << aa.axis(0) << ", " << aa.axis(1) << ", " << aa.axis(2) << "]\n"
              << "angle " << aa.angle << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"effective spin reduced density matrices for relativistic spin-1/2 particles"};
    app.require_subcommand(1);

    auto* sweep = app.add_subcommand("sg-sweep", "Stern-Gerlach expectation sweep, CSV output");
    std::string config_path, out_path;
    sweep->add_option("--config", config_path, "sweep config file")->required();
    sweep->add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite = "all";
    uint64_t seed = 42;
    verify->add_option("--suite", suite, "lorentz|wigner|rdm|sg|covariance|all");
    verify->add_option("--seed", seed, "RNG seed");

    auto* wigner = app.add_subcommand("wigner", "print a generalized Wigner rotation");
    std::string set_desc, a_desc;
    double mass = 1.0, px = 0, py = 0, pz = 0;
    wigner->add_option("set", set_desc, "boost | sg:<axis>[:<phi>]")->required();
    wigner->add_option("transform", a_desc, "rot:<axis>:<angle> | boost:<axis>:<rapidity>")
        ->required();
    wigner->add_option("mass", mass, "particle mass")->required();
    wigner->add_option("px", px)->required();
    wigner->add_option("py", py)->required();
    wigner->add_option("pz", pz)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return run_sweep(config_path, out_path);
        if (verify->parsed()) return run_verify(suite, seed);
        if (wigner->parsed()) return run_wigner(set_desc, a_desc, mass, px, py, pz);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
