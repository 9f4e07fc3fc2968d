// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Oracles are closed forms computed independently of the library
// paths they check.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "vekua/bvp.hpp"
#include "vekua/conjugate.hpp"
#include "vekua/csv.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/meridional.hpp"
#include "vekua/verify.hpp"

using namespace vekua;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++g_failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << "\n" << std::flush;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// ---- criterion bodies ------------------------------------------------------

Outcome meridional_degeneration() {
    const auto t0 = std::chrono::steady_clock::now();
    const RadialProfile p = RadialProfile::reciprocal(1.0, 0.3, 3.0);
    const XSequence xs(p, 1.0, XSequence::make_grid(0.45, 2.05, 1.0, 512), 8);
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ux(0.5, 2.0), uy(-1.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < 50; ++s) {
        const Complex z{ux(rng), uy(rng)};
        for (int n = 0; n <= 8; ++n) {
            const Complex ref = pow_int(z - Complex{1, 0}, n);
            worst = std::max(worst,
                             std::abs(eval_meridional_power(xs, n, {1, 0}, 0.0, z) - ref));
            worst = std::max(worst, std::abs(eval_meridional_power(xs, n, {0, 1}, 0.0, z) -
                                             Complex{0, 1} * ref));
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst <= 1e-9 && secs < 5.0,
            "max err " + fmt(worst) + " tol 1e-9, " + fmt(secs) + " s"};
}

Outcome meridional_closed_forms() {
    const RadialProfile p = RadialProfile::constant(1.0, 0.25, 3.0);
    const XSequence xs(p, 1.0, XSequence::make_grid(0.5, 2.5, 1.0, 512), 2);
    const double e1 = std::abs(xs.X(1, 2.0) - std::log(2.0));
    const double e2 = std::abs(xs.Xt(1, 2.0) - 1.5);
    const double e3 = std::abs(xs.X(2, 2.0) - (4.0 * std::log(2.0) - 1.5));
    const double worst = std::max({e1, e2, e3});
    return {worst <= 1e-10, "max err " + fmt(worst) + " tol 1e-10"};
}

Outcome transverse_log_oracle() {
    const RadialProfile p = RadialProfile::constant(1.0, 0.5, 5.0);
    const GeneratingSequence seq = transverse_sequence(p);
    const Complex z0{2, 0};
    const Domain dom = Domain::disk(z0, 0.9);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ur(0.0, 0.85), uphi(0.0, 2 * M_PI);
    std::vector<Complex> targets;
    for (int s = 0; s < 20; ++s) targets.push_back(z0 + std::polar(ur(rng), uphi(rng)));
    const FormalPowerTable table = FormalPowerTable::build(seq, p, z0, 1, targets, dom);
    double worst1 = 0.0, worst0 = 0.0;
    for (size_t t = 0; t < targets.size(); ++t) {
        const Complex ref = z0 * std::log(targets[t] / z0);
        worst1 = std::max(worst1, std::abs(table.value(1, Coeff::One, t) - ref));
        worst1 = std::max(worst1,
                          std::abs(table.value(1, Coeff::I, t) - Complex{0, 1} * ref));
        for (const Coeff c : {Coeff::One, Coeff::I})
            worst0 = std::max(worst0, std::abs(table.value(0, c, t) -
                                               zero_order_power(0, c, z0, targets[t], p)));
    }
    return {worst1 <= 1e-8 && worst0 <= 1e-13,
            "log power err " + fmt(worst1) + " tol 1e-8, base err " + fmt(worst0)};
}

Outcome vekua_residual_orders() {
    const std::vector<std::pair<std::string, RadialProfile>> presets = {
        {"1", RadialProfile::constant(1.0, 0.5, 5.0)},
        {"r^2", RadialProfile::power(1.0, 2.0, 0.5, 5.0)},
        {"e^r", RadialProfile::exponential(1.0, 1.0, 0.0, 5.0)},
    };
    const Complex z0{2, 0};
    const GridSpec grid{1.82, 2.18, -0.18, 0.18, 9, 9};
    double min_order = std::numeric_limits<double>::infinity();
    for (const auto& [label, p] : presets) {
        const GeneratingSequence seq = transverse_sequence(p);
        for (int n = 1; n <= 6; ++n) {
            auto W = [&](Complex z) { return formal_power(seq, z0, n, Coeff::One, z); };
            min_order = std::min(min_order, vekua_residual(W, p, grid).estimated_order);
        }
    }
    const RadialProfile sq = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
    const ResidualReport neg = vekua_residual([](Complex) { return Complex{1, 0}; }, sq, grid);
    const bool neg_fails = neg.estimated_order < 1.8 && neg.max_residual > 1e-3;
    return {min_order >= 1.8 && neg_fails,
            "min order " + fmt(min_order) + " (>= 1.8), negative control order " +
                fmt(neg.estimated_order)};
}

Outcome successor_identity() {
    const RadialProfile p = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
    const GeneratingSequence seq = transverse_sequence(p);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ur(1.2, 2.8), uphi(0.0, 2 * M_PI);
    std::vector<Complex> samples;
    for (int s = 0; s < 100; ++s) samples.push_back(std::polar(ur(rng), uphi(rng)));
    double worst = 0.0;
    for (int m : {0, 1, 2}) worst = std::max(worst, successor_check(seq, m, samples, 1e-5));
    return {worst <= 1e-6, "max deviation " + fmt(worst) + " tol 1e-6"};
}

Outcome path_independence() {
    const RadialProfile p = RadialProfile::exponential(1.0, 1.0, 0.0, 5.0);
    const GeneratingSequence seq = transverse_sequence(p);
    const Complex z0{2, 0}, z{1.3, 1.1};
    double worst_margin = 0.0;
    for (int n = 1; n <= 5; ++n) {
        for (const Coeff c : {Coeff::One, Coeff::I}) {
            const PathIndependenceResult r = path_independence_check(
                seq, z0, n, c, log_polar_path(z0, z), log_polar_path_arc_first(z0, z));
            worst_margin = std::max(
                worst_margin, r.disagreement / std::max(10.0 * r.combined_estimate, 1e-15));
        }
    }
    return {worst_margin <= 1.0,
            "worst disagreement / (10 x estimates) = " + fmt(worst_margin)};
}

Outcome asymptotics() {
    const std::vector<std::pair<std::string, RadialProfile>> presets = {
        {"1", RadialProfile::constant(1.0, 0.5, 5.0)},
        {"r^2", RadialProfile::power(1.0, 2.0, 0.5, 5.0)},
        {"e^r", RadialProfile::exponential(1.0, 1.0, 0.0, 5.0)},
    };
    const std::vector<double> radii = {1e-1, 1e-2, 1e-3};
    bool monotone = true;
    double last = 0.0;
    for (const auto& [label, p] : presets) {
        const GeneratingSequence seq = transverse_sequence(p);
        for (int n = 1; n <= 4; ++n) {
            const auto devs = asymptotic_check(seq, Complex{2, 0}, n, radii);
            for (size_t i = 1; i < devs.size(); ++i) monotone = monotone && devs[i] < devs[i - 1];
            last = std::max(last, devs.back());
        }
    }
    return {monotone && last <= 5e-3,
            std::string(monotone ? "monotone" : "NOT monotone") + ", final dev " + fmt(last) +
                " tol 5e-3"};
}

Outcome bvp_transverse_disk() {
    const auto t0 = std::chrono::steady_clock::now();
    const double beta = std::sqrt(2.0) - 1.0;
    auto exact = [beta](Complex z) {
        return std::pow(std::abs(z), beta) * std::cos(std::arg(z));
    };
    BvpProblem prob;
    prob.kind = BvpCase::Transverse;
    prob.domain = Domain::disk({2, 0}, 0.75);
    prob.profile = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
    prob.z0 = {2, 0};

    std::vector<Complex> eval_pts;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            eval_pts.push_back(prob.z0 + std::polar(0.7 * 0.75 * (i + 0.5) / 10.0,
                                                    2 * M_PI * (j + 0.5) / 10.0));

    std::vector<double> errors;
    std::vector<double> conds;
    for (int n = 0; n <= 20; ++n) {
        prob.n_max = n;
        prob.boundary = sample_boundary(prob.domain, default_collocation_count(n), exact);
        const auto basis = make_basis(prob);
        const BvpSolution sol = solve(prob, *basis);
        conds.push_back(sol.condition_estimate);
        const Eigen::MatrixXd U = basis->sample(eval_pts);
        const Eigen::Map<const Eigen::VectorXd> c(sol.coefficients.data(),
                                                  sol.coefficients.size());
        const Eigen::VectorXd uh = U * c;
        double err = 0.0;
        for (size_t i = 0; i < eval_pts.size(); ++i)
            err = std::max(err, std::abs(uh(i) - exact(eval_pts[i])));
        errors.push_back(err);
    }
    size_t hit = errors.size();
    for (size_t i = 0; i < errors.size(); ++i)
        if (errors[i] <= 1e-4) {
            hit = i;
            break;
        }
    bool monotone = true;
    for (size_t i = 0; i + 1 <= hit && i + 1 < errors.size(); ++i)
        monotone = monotone && errors[i + 1] <= errors[i] * 1.05 + 1e-15;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = hit < errors.size() && monotone && secs < 60.0;
    std::ostringstream detail;
    detail << "err " << fmt(hit < errors.size() ? errors[hit] : errors.back()) << " at n_max="
           << (hit < errors.size() ? std::to_string(hit) : std::string("none")) << ", cond "
           << fmt(conds.back()) << ", " << (monotone ? "non-increasing" : "NOT monotone") << ", "
           << fmt(secs) << " s";
    return {pass, detail.str()};
}

Outcome bvp_meridional_exactness() {
    BvpProblem prob;
    prob.kind = BvpCase::Meridional;
    prob.domain = Domain::rectangle(1, 2, 0, 1);
    prob.profile = RadialProfile::constant(1.0, 0.5, 3.0);
    prob.z0 = {1.5, 0.5};
    prob.n_max = 4;
    const MeridionalPowerBasis basis(prob.profile, prob.domain, prob.z0, prob.n_max);
    auto datum = [&](Complex z) {
        return eval_meridional_power(basis.sequence(), 2, {1, 0}, 0.5, z).real();
    };
    prob.boundary = sample_boundary(prob.domain, default_collocation_count(prob.n_max), datum);
    const BvpSolution sol = solve(prob, basis);
    return {sol.boundary_residual_max <= 1e-8,
            "boundary residual " + fmt(sol.boundary_residual_max) + " tol 1e-8"};
}

Outcome conjugate_reconstruction() {
    const RadialProfile p = RadialProfile::constant(1.0);
    const Domain dom = Domain::rectangle(-1, 1, -1, 1);
    auto u = [](Complex z) { return z.real() * z.real() - z.imag() * z.imag(); };
    const ScalarField v = reconstruct_conjugate(u, p, dom, {0, 0});
    double worst = 0.0;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uc(-0.9, 0.9);
    for (int s = 0; s < 30; ++s) {
        const Complex z{uc(rng), uc(rng)};
        worst = std::max(worst, std::abs(v(z) - 2.0 * z.real() * z.imag()));
    }

    // the pair (u, v) solves u_x = v_y/eps, u_y = -v_x/eps; both stencils are
    // exact on quadratics so the residual must sit at the quadrature floor
    const GridSpec grid{-0.5, 0.5, -0.5, 0.5, 9, 9};
    auto system_residual = [&](const GridSpec& g) {
        double worst_r = 0.0;
        for (int j = 1; j + 1 < g.ny; ++j)
            for (int i = 1; i + 1 < g.nx; ++i) {
                const Complex z{g.x0 + i * g.hx(), g.y0 + j * g.hy()};
                const double ux = (u(z + Complex{g.hx(), 0}) - u(z - Complex{g.hx(), 0})) /
                                  (2 * g.hx());
                const double uy = (u(z + Complex{0, g.hy()}) - u(z - Complex{0, g.hy()})) /
                                  (2 * g.hy());
                const double vx = (v(z + Complex{g.hx(), 0}) - v(z - Complex{g.hx(), 0})) /
                                  (2 * g.hx());
                const double vy = (v(z + Complex{0, g.hy()}) - v(z - Complex{0, g.hy()})) /
                                  (2 * g.hy());
                worst_r = std::max(worst_r, std::abs(ux - vy));
                worst_r = std::max(worst_r, std::abs(uy + vx));
            }
        return worst_r;
    };
    const double r1 = system_residual(grid), r2 = system_residual(grid.halved());
    const bool system_ok = (r1 <= 1e-10 && r2 <= 1e-10) || std::log2(r1 / r2) >= 1.8;

    const ResidualReport vrep = conductivity_residual(v, p, grid, /*reciprocal=*/true);
    const bool v_ok = vrep.max_residual <= 1e-8 || vrep.estimated_order >= 1.8;

    return {worst <= 1e-8 && system_ok && v_ok,
            "max |v - 2xy| " + fmt(worst) + " tol 1e-8, system residual " + fmt(r1) +
                ", div residual " + fmt(vrep.max_residual)};
}

Outcome cli_determinism() {
    const char* cli = std::getenv("VEKUA_CLI");
    if (!cli) return {false, "VEKUA_CLI not set"};
    const fs::path dir = fs::temp_directory_path() / "vekua_acceptance_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "config.json");
        os << R"({
          "profile": {"kind": "reciprocal", "c": 1.0, "range": [0.3, 3.0]},
          "z0": [1.0, 0.0],
          "grid": {"min": 0.45, "max": 2.1, "points": 256},
          "n_max": 4,
          "targets": [[0.6, -0.4], [1.5, 0.25], [2.0, 0.8]]
        })";
    }
    auto run_once = [&](const fs::path& out) {
        const std::string cmd = std::string(cli) + " powers-meridional --config " +
                                (dir / "config.json").string() + " --out " + out.string() +
                                " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    if (run_once(dir / "a") != 0 || run_once(dir / "b") != 0)
        return {false, "cli run failed"};
    auto slurp = [](const fs::path& f) {
        std::ifstream is(f, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    int compared = 0;
    for (const auto& e : fs::directory_iterator(dir / "a")) {
        const fs::path twin = dir / "b" / e.path().filename();
        if (!fs::exists(twin) || slurp(e.path()) != slurp(twin))
            return {false, "artifact mismatch: " + e.path().filename().string()};
        ++compared;
    }
    return {compared == 2, std::to_string(compared) + " artifacts byte-identical"};
}

} // namespace

int main() {
    criterion(1, "meridional degeneration oracle (eps = 1/x)", meridional_degeneration);
    criterion(2, "meridional closed-form integrals (eps = 1)", meridional_closed_forms);
    criterion(3, "transverse logarithmic oracle (eps = 1)", transverse_log_oracle);
    criterion(4, "Vekua residual order with negative control", vekua_residual_orders);
    criterion(5, "successor identity of the generating sequence", successor_identity);
    criterion(6, "path independence of formal powers", path_independence);
    criterion(7, "asymptotics near the center", asymptotics);
    criterion(8, "transverse BVP oracle on the disk (eps = r^2)", bvp_transverse_disk);
    criterion(9, "meridional BVP exactness on a basis element", bvp_meridional_exactness);
    criterion(10, "conjugate reconstruction (eps = 1)", conjugate_reconstruction);
    criterion(11, "CLI determinism: byte-identical artifacts", cli_determinism);

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (11 - g_failures) << "/11)\n";
    return g_failures;
}
