#include "vekua/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vekua {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Lattice {
    GridSpec g;
    std::vector<Complex> w;  // row-major [j*nx+i], NaN components where evaluation failed
    std::vector<double> f;   // sqrt(eps(|z|)), NaN where outside profile range
    int failures = 0;
};

Lattice eval_lattice(const ComplexField& W, const RadialProfile& p, const GridSpec& g) {
    Lattice lat;
    lat.g = g;
    lat.w.resize(static_cast<size_t>(g.nx) * g.ny, Complex{kNaN, kNaN});
    lat.f.resize(static_cast<size_t>(g.nx) * g.ny, kNaN);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const Complex z{g.x0 + i * g.hx(), g.y0 + j * g.hy()};
            const size_t k = static_cast<size_t>(j) * g.nx + i;
            try {
                lat.f[k] = p.sqrt_at(std::abs(z));
                lat.w[k] = W(z);
            } catch (const std::exception&) {
                ++lat.failures;
            }
        }
    }
    return lat;
}

struct SingleResidual {
    double max_r = 0.0, rms = 0.0;
    int considered = 0, skipped = 0;
};

// residual at lattice point (i, j); NaN when the stencil is incomplete
double vekua_residual_at(const Lattice& lat, int i, int j) {
    const GridSpec& g = lat.g;
    auto at = [&](int ii, int jj) { return static_cast<size_t>(jj) * g.nx + ii; };
    const Complex w = lat.w[at(i, j)];
    const Complex wxp = lat.w[at(i + 1, j)], wxm = lat.w[at(i - 1, j)];
    const Complex wyp = lat.w[at(i, j + 1)], wym = lat.w[at(i, j - 1)];
    const double f = lat.f[at(i, j)];
    const double fxp = lat.f[at(i + 1, j)], fxm = lat.f[at(i - 1, j)];
    const double fyp = lat.f[at(i, j + 1)], fym = lat.f[at(i, j - 1)];
    if (!is_finite(w) || !is_finite(wxp) || !is_finite(wxm) || !is_finite(wyp) ||
        !is_finite(wym) || !std::isfinite(f) || !std::isfinite(fxp) || !std::isfinite(fxm) ||
        !std::isfinite(fyp) || !std::isfinite(fym))
        return kNaN;
    const Complex wx = (wxp - wxm) / (2.0 * g.hx());
    const Complex wy = (wyp - wym) / (2.0 * g.hy());
    const Complex wzb = 0.5 * (wx + Complex{0, 1} * wy);
    const double fx = (fxp - fxm) / (2.0 * g.hx());
    const double fy = (fyp - fym) / (2.0 * g.hy());
    const Complex fzb = 0.5 * Complex{fx, fy};
    return std::abs(wzb - fzb / f * std::conj(w));
}

template <typename ResidualAt>
SingleResidual collect_interior(const GridSpec& g, ResidualAt&& residual_at, int stride = 1) {
    SingleResidual out;
    double sq = 0.0;
    for (int j = stride; j + stride < g.ny; j += stride) {
        for (int i = stride; i + stride < g.nx; i += stride) {
            const double r = residual_at(i, j);
            if (!std::isfinite(r)) {
                ++out.skipped;
                continue;
            }
            out.max_r = std::max(out.max_r, r);
            sq += r * r;
            ++out.considered;
        }
    }
    out.rms = out.considered ? std::sqrt(sq / out.considered) : 0.0;
    return out;
}

} // namespace

ResidualReport vekua_residual(const ComplexField& W, const RadialProfile& profile,
                              const GridSpec& grid) {
    const Lattice coarse = eval_lattice(W, profile, grid);
    const Lattice fine = eval_lattice(W, profile, grid.halved());
    const SingleResidual rc =
        collect_interior(grid, [&](int i, int j) { return vekua_residual_at(coarse, i, j); });
    // the order is estimated at matching physical points: the coarse interior
    // coincides with the even-index sublattice of the halving
    const SingleResidual rf = collect_interior(
        fine.g, [&](int i, int j) { return vekua_residual_at(fine, i, j); }, 2);
    ResidualReport rep;
    rep.h = std::max(grid.hx(), grid.hy());
    rep.max_residual = rc.max_r;
    rep.rms_residual = rc.rms;
    rep.skipped_points = rc.skipped + coarse.failures;
    rep.estimated_order =
        (rf.max_r > 0 && rc.max_r > 0) ? std::log2(rc.max_r / rf.max_r) : 0.0;
    return rep;
}

namespace {

struct ScalarLattice {
    GridSpec g;
    std::vector<double> u;
    int failures = 0;
};

ScalarLattice eval_scalar_lattice(const std::function<double(Complex)>& u, const GridSpec& g) {
    ScalarLattice lat;
    lat.g = g;
    lat.u.resize(static_cast<size_t>(g.nx) * g.ny, kNaN);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const Complex z{g.x0 + i * g.hx(), g.y0 + j * g.hy()};
            try {
                lat.u[static_cast<size_t>(j) * g.nx + i] = u(z);
            } catch (const std::exception&) {
                ++lat.failures;
            }
        }
    return lat;
}

double conductivity_residual_at(const ScalarLattice& lat, const RadialProfile& p, bool reciprocal,
                                int i, int j) {
    const GridSpec& g = lat.g;
    const double hx = g.hx(), hy = g.hy();
    auto at = [&](int ii, int jj) { return static_cast<size_t>(jj) * g.nx + ii; };
    auto eps = [&](Complex z) {
        const double e = p(std::abs(z));
        return reciprocal ? 1.0 / e : e;
    };
    const double u = lat.u[at(i, j)];
    const double uxp = lat.u[at(i + 1, j)], uxm = lat.u[at(i - 1, j)];
    const double uyp = lat.u[at(i, j + 1)], uym = lat.u[at(i, j - 1)];
    if (!std::isfinite(u) || !std::isfinite(uxp) || !std::isfinite(uxm) || !std::isfinite(uyp) ||
        !std::isfinite(uym))
        return kNaN;
    const Complex z{g.x0 + i * hx, g.y0 + j * hy};
    try {
        const double exp_ = eps(z + Complex{hx / 2, 0});
        const double exm = eps(z - Complex{hx / 2, 0});
        const double eyp = eps(z + Complex{0, hy / 2});
        const double eym = eps(z - Complex{0, hy / 2});
        return std::abs((exp_ * (uxp - u) - exm * (u - uxm)) / (hx * hx) +
                        (eyp * (uyp - u) - eym * (u - uym)) / (hy * hy));
    } catch (const std::exception&) {
        return kNaN;
    }
}

} // namespace

ResidualReport conductivity_residual(const std::function<double(Complex)>& u,
                                     const RadialProfile& profile, const GridSpec& grid,
                                     bool reciprocal) {
    const ScalarLattice coarse = eval_scalar_lattice(u, grid);
    const ScalarLattice fine = eval_scalar_lattice(u, grid.halved());
    const SingleResidual rc = collect_interior(grid, [&](int i, int j) {
        return conductivity_residual_at(coarse, profile, reciprocal, i, j);
    });
    const SingleResidual rf = collect_interior(
        fine.g,
        [&](int i, int j) { return conductivity_residual_at(fine, profile, reciprocal, i, j); },
        2);
    ResidualReport rep;
    rep.h = std::max(grid.hx(), grid.hy());
    rep.max_residual = rc.max_r;
    rep.rms_residual = rc.rms;
    rep.skipped_points = rc.skipped + coarse.failures;
    rep.estimated_order =
        (rf.max_r > 0 && rc.max_r > 0) ? std::log2(rc.max_r / rf.max_r) : 0.0;
    return rep;
}

double successor_check(const GeneratingSequence& seq, int m, std::span<const Complex> samples,
                       double fd_step_rel) {
    double worst = 0.0;
    int used = 0;
    for (const Complex& z : samples) {
        try {
            const double h = fd_step_rel * std::abs(z);
            const CharacteristicCoefficients next = characteristic_coefficients(seq, m + 1, z, h);
            const CharacteristicCoefficients cur = characteristic_coefficients(seq, m, z, h);
            const double dev = std::abs(next.a - cur.a) + std::abs(next.b + cur.B);
            worst = std::max(worst, dev);
            ++used;
        } catch (const std::domain_error&) {
            // degenerate pair at this sample; reject it
        }
    }
    if (used == 0) throw std::runtime_error("successor_check: all samples rejected");
    return worst;
}

std::vector<double> asymptotic_check(const GeneratingSequence& seq, Complex z0, int n,
                                     std::span<const double> radii, Coeff coeff, int directions,
                                     const PathOptions& opt) {
    const Complex a = coeff_value(coeff);
    std::vector<double> out;
    out.reserve(radii.size());
    for (const double rho : radii) {
        double dev = 0.0;
        for (int k = 0; k < directions; ++k) {
            const double phi = 2.0 * M_PI * k / directions + 0.37;
            const Complex z = z0 + rho * Complex{std::cos(phi), std::sin(phi)};
            const Complex Z = formal_power(seq, z0, n, coeff, z, opt);
            const Complex ref = a * pow_int(z - z0, n);
            dev = std::max(dev, std::abs(Z / ref - 1.0));
        }
        out.push_back(dev);
    }
    return out;
}

PathIndependenceResult path_independence_check(const GeneratingSequence& seq, Complex z0, int n,
                                               Coeff coeff, const PathSpec& path_a,
                                               const PathSpec& path_b) {
    if (path_a.origin_distance() <= 0.0 || path_b.origin_distance() <= 0.0)
        throw std::domain_error("path_independence_check: paths must avoid the origin");
    const PowerWithEstimate va = formal_power_along(seq, z0, n, coeff, path_a);
    const PowerWithEstimate vb = formal_power_along(seq, z0, n, coeff, path_b);
    return {std::abs(va.value - vb.value), va.refinement_estimate + vb.refinement_estimate};
}

ConvergenceStudy convergence_study(BvpProblem problem,
                                   const std::function<double(Complex)>& boundary_data,
                                   const std::function<double(Complex)>& exact,
                                   std::span<const int> ns, std::span<const Complex> eval_points) {
    ConvergenceStudy study;
    for (const int n : ns) {
        problem.n_max = n;
        problem.boundary =
            sample_boundary(problem.domain, default_collocation_count(n), boundary_data);
        try {
            const auto basis = make_basis(problem);
            const BvpSolution sol = solve(problem, *basis);
            const Eigen::MatrixXd U = basis->sample(eval_points);
            const Eigen::Map<const Eigen::VectorXd> c(sol.coefficients.data(),
                                                      sol.coefficients.size());
            const Eigen::VectorXd u = U * c;
            double err = 0.0;
            for (size_t i = 0; i < eval_points.size(); ++i)
                err = std::max(err, std::abs(u(i) - exact(eval_points[i])));
            study.n_values.push_back(n);
            study.errors.push_back(err);
        } catch (const std::exception&) {
            study.truncated = true;
            break;
        }
    }
    // fit the tail half of (log n, log err), skipping n = 0 and zero errors
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < study.n_values.size(); ++i)
        if (study.n_values[i] >= 1 && study.errors[i] > 0)
            pts.emplace_back(std::log(static_cast<double>(study.n_values[i])),
                             std::log(study.errors[i]));
    const size_t tail = (pts.size() + 1) / 2;
    if (tail >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const size_t start = pts.size() - tail;
        for (size_t i = start; i < pts.size(); ++i) {
            sx += pts[i].first;
            sy += pts[i].second;
            sxx += pts[i].first * pts[i].first;
            sxy += pts[i].first * pts[i].second;
        }
        const double k = static_cast<double>(tail);
        const double den = k * sxx - sx * sx;
        study.fitted_rate = den != 0.0 ? (k * sxy - sx * sy) / den : 0.0;
    }
    return study;
}

std::function<double(Complex)> harmonic_collocation(std::span<const BoundarySample> boundary,
                                                    Complex z0, int n_max) {
    const int cols = 2 * n_max + 1;
    Eigen::MatrixXd A(boundary.size(), cols);
    Eigen::VectorXd b(boundary.size());
    auto fill_row = [&](Eigen::Index i, Complex z, Eigen::MatrixXd& M) {
        M(i, 0) = 1.0;
        Complex pw{1.0, 0.0};
        for (int n = 1; n <= n_max; ++n) {
            pw *= (z - z0);
            M(i, 2 * n - 1) = pw.real();
            M(i, 2 * n) = pw.imag();
        }
    };
    for (size_t i = 0; i < boundary.size(); ++i) {
        fill_row(static_cast<Eigen::Index>(i), boundary[i].point, A);
        b(static_cast<Eigen::Index>(i)) = boundary[i].value;
    }
    const BvpSolution sol = solve_least_squares(A, b);
    std::vector<double> coeffs = sol.coefficients;
    return [coeffs, z0, n_max](Complex z) {
        double u = coeffs[0];
        Complex pw{1.0, 0.0};
        for (int n = 1; n <= n_max; ++n) {
            pw *= (z - z0);
            u += coeffs[2 * n - 1] * pw.real() + coeffs[2 * n] * pw.imag();
        }
        return u;
    };
}

namespace {

// deterministic samples for the battery
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    double next() { // in [0,1)
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    }
};

std::string fmt_params(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ", ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

std::vector<CheckResult> run_default_verification() {
    std::vector<CheckResult> out;

    // 1. meridional degeneration: eps = 1/x makes the powers collapse to (z - z0)^n
    {
        const RadialProfile p = RadialProfile::reciprocal(1.0, 0.3, 3.0);
        const XSequence xs(p, 1.0, XSequence::make_grid(0.45, 2.1, 1.0), 8);
        Lcg rng(2024);
        double worst = 0.0;
        for (int s = 0; s < 30; ++s) {
            const Complex z{0.5 + 1.5 * rng.next(), -1.0 + 2.0 * rng.next()};
            for (int n = 0; n <= 8; ++n) {
                const Complex ref = pow_int(z - Complex{1, 0}, n);
                worst = std::max(worst, std::abs(eval_meridional_power(xs, n, {1, 0}, 0.0, z) - ref));
                worst = std::max(worst, std::abs(eval_meridional_power(xs, n, {0, 1}, 0.0, z) -
                                                 Complex{0, 1} * ref));
            }
        }
        out.push_back({"meridional-degeneration",
                       fmt_params({{"profile", "1/x"}, {"n_max", "8"}, {"samples", "30"}}), worst,
                       1e-9, worst <= 1e-9});
    }

    // 2. meridional closed forms for eps = 1
    {
        const RadialProfile p = RadialProfile::constant(1.0);
        const XSequence xs(p, 1.0, XSequence::make_grid(0.5, 2.5, 1.0), 2);
        const double e1 = std::abs(xs.X(1, 2.0) - std::log(2.0));
        const double e2 = std::abs(xs.Xt(1, 2.0) - 1.5);
        const double e3 = std::abs(xs.X(2, 2.0) - (4.0 * std::log(2.0) - 1.5));
        const double worst = std::max({e1, e2, e3});
        out.push_back({"meridional-closed-forms", fmt_params({{"profile", "1"}, {"x0", "1"}}),
                       worst, 1e-10, worst <= 1e-10});
    }

    // 3. transverse log oracle for eps = 1
    {
        const RadialProfile p = RadialProfile::constant(1.0, 0.5, 5.0);
        const GeneratingSequence seq = transverse_sequence(p);
        const Complex z0{2, 0};
        const Domain dom = Domain::disk(z0, 0.9);
        Lcg rng(7);
        double worst = 0.0;
        for (int s = 0; s < 12; ++s) {
            const double rho = 0.85 * std::sqrt(rng.next());
            const double phi = 2 * M_PI * rng.next();
            const Complex z = z0 + rho * Complex{std::cos(phi), std::sin(phi)};
            const Complex ref = z0 * std::log(z / z0);
            worst = std::max(worst, std::abs(formal_power(seq, z0, 1, Coeff::One, z) - ref));
            worst = std::max(worst,
                             std::abs(zero_order_power(0, Coeff::One, z0, z, p) - Complex{1, 0}));
        }
        out.push_back({"transverse-log-oracle",
                       fmt_params({{"profile", "1"}, {"targets", "12"}}), worst, 1e-8,
                       worst <= 1e-8});
    }

    // 4. Vekua residual order for the presets, with a negative control
    {
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
            for (int n : {2, 5}) {
                auto W = [&](Complex z) { return formal_power(seq, z0, n, Coeff::One, z); };
                const ResidualReport rep = vekua_residual(W, p, grid);
                min_order = std::min(min_order, rep.estimated_order);
            }
        }
        out.push_back({"vekua-residual-order",
                       fmt_params({{"profiles", "1,r^2,e^r"}, {"n", "2,5"}}), min_order, 1.8,
                       min_order >= 1.8});

        const RadialProfile p2 = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
        const ResidualReport neg =
            vekua_residual([](Complex) { return Complex{1, 0}; }, p2, grid);
        out.push_back({"vekua-residual-negative-control",
                       fmt_params({{"profile", "r^2"}, {"W", "1"}}), neg.estimated_order, 1.8,
                       neg.estimated_order < 1.8 && neg.max_residual > 1e-3});
    }

    // 5. successor identity
    {
        const RadialProfile p = RadialProfile::power(1.0, 2.0, 0.5, 5.0);
        const GeneratingSequence seq = transverse_sequence(p);
        Lcg rng(11);
        std::vector<Complex> samples;
        for (int s = 0; s < 100; ++s) {
            const double r = 1.5 + rng.next();
            const double phi = 2 * M_PI * rng.next();
            samples.emplace_back(r * std::cos(phi), r * std::sin(phi));
        }
        double worst = 0.0;
        for (int m : {0, 1, 2}) worst = std::max(worst, successor_check(seq, m, samples));
        out.push_back({"successor-identity",
                       fmt_params({{"profile", "r^2"}, {"m", "0,1,2"}, {"samples", "100"}}), worst,
                       1e-6, worst <= 1e-6});
    }

    // 6. path independence
    {
        const RadialProfile p = RadialProfile::exponential(1.0, 1.0, 0.0, 5.0);
        const GeneratingSequence seq = transverse_sequence(p);
        const Complex z0{2, 0}, z{1.3, 1.1};
        double worst_ratio = 0.0;
        for (int n = 1; n <= 5; ++n) {
            const PathIndependenceResult r = path_independence_check(
                seq, z0, n, Coeff::One, log_polar_path(z0, z), log_polar_path_arc_first(z0, z));
            worst_ratio = std::max(worst_ratio,
                                   r.disagreement / std::max(10.0 * r.combined_estimate, 1e-15));
        }
        out.push_back({"path-independence", fmt_params({{"profile", "e^r"}, {"n_max", "5"}}),
                       worst_ratio, 1.0, worst_ratio <= 1.0});
    }

    // 7. asymptotics near the center
    {
        const RadialProfile p = RadialProfile::exponential(1.0, 1.0, 0.0, 5.0);
        const GeneratingSequence seq = transverse_sequence(p);
        const std::vector<double> radii = {1e-1, 1e-2, 1e-3};
        double last = 0.0;
        bool monotone = true;
        for (int n = 1; n <= 4; ++n) {
            const auto devs = asymptotic_check(seq, Complex{2, 0}, n, radii);
            for (size_t i = 1; i < devs.size(); ++i) monotone = monotone && devs[i] < devs[i - 1];
            last = std::max(last, devs.back());
        }
        out.push_back({"asymptotics", fmt_params({{"profile", "e^r"}, {"n_max", "4"}}), last, 5e-3,
                       monotone && last <= 5e-3});
    }

    // 8. transverse BVP against the separable exact solution
    {
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
        for (int k = 0; k < 40; ++k) {
            const double rho = 0.65 * std::sqrt((k % 8 + 0.5) / 8.0);
            const double phi = 2 * M_PI * (k / 8 + 0.5) / 5.0;
            eval_pts.push_back(prob.z0 + rho * Complex{std::cos(phi), std::sin(phi)});
        }
        const std::vector<int> ns = {0, 2, 4, 6, 8, 10, 12, 14};
        const ConvergenceStudy study = convergence_study(prob, exact, exact, ns, eval_pts);
        const double best =
            study.errors.empty() ? std::numeric_limits<double>::infinity()
                                 : *std::min_element(study.errors.begin(), study.errors.end());
        out.push_back({"bvp-transverse-disk",
                       fmt_params({{"profile", "r^2"}, {"n_max", "14"}}), best, 1e-4,
                       best <= 1e-4 && !study.truncated});
    }

    // 9. meridional BVP exactness on a basis element
    {
        BvpProblem prob;
        prob.kind = BvpCase::Meridional;
        prob.domain = Domain::rectangle(1, 2, 0, 1);
        prob.profile = RadialProfile::constant(1.0, 0.5, 3.0);
        prob.z0 = {1.5, 0.5};
        prob.n_max = 4;
        const MeridionalPowerBasis basis(prob.profile, prob.domain, prob.z0, prob.n_max);
        auto datum = [&](Complex z) {
            return eval_meridional_power(basis.sequence(), 2, {1, 0}, prob.z0.imag(), z).real();
        };
        prob.boundary =
            sample_boundary(prob.domain, default_collocation_count(prob.n_max), datum);
        const BvpSolution sol = solve(prob, basis);
        out.push_back({"bvp-meridional-exactness",
                       fmt_params({{"profile", "1"}, {"datum", "power n=2"}}),
                       sol.boundary_residual_max, 1e-8, sol.boundary_residual_max <= 1e-8});
    }

    // 10. conjugate reconstruction for the saddle
    {
        const RadialProfile p = RadialProfile::constant(1.0);
        const Domain dom = Domain::rectangle(-1, 1, -1, 1);
        auto u = [](Complex z) { return z.real() * z.real() - z.imag() * z.imag(); };
        const ScalarField v = reconstruct_conjugate(u, p, dom, Complex{0, 0});
        double worst = 0.0;
        Lcg rng(5);
        for (int s = 0; s < 25; ++s) {
            const Complex z{-0.9 + 1.8 * rng.next(), -0.9 + 1.8 * rng.next()};
            worst = std::max(worst, std::abs(v(z) - 2.0 * z.real() * z.imag()));
        }
        out.push_back({"conjugate-reconstruction",
                       fmt_params({{"profile", "1"}, {"u", "x^2-y^2"}}), worst, 1e-8,
                       worst <= 1e-8});
    }

    // 11. cross-oracle against classical harmonic collocation: eps = 1
    // transverse (both bases resolve the datum below tolerance) and
    // eps = 1/x meridional (identical spans)
    {
        const Complex z0{2, 0};
        BvpProblem prob;
        prob.kind = BvpCase::Transverse;
        prob.domain = Domain::disk(z0, 0.5);
        prob.profile = RadialProfile::constant(1.0, 0.5, 5.0);
        prob.z0 = z0;
        prob.n_max = 12;
        auto data = [&](Complex z) {
            const Complex w = z - z0;
            return std::exp(w.real()) * std::cos(w.imag()); // harmonic
        };
        prob.boundary = sample_boundary(prob.domain, default_collocation_count(prob.n_max), data);
        const auto basis = make_basis(prob);
        const BvpSolution sol = solve(prob, *basis);
        const auto classical = harmonic_collocation(prob.boundary, z0, prob.n_max);
        std::vector<Complex> pts;
        for (int k = 0; k < 20; ++k) {
            const double rho = 0.35 * std::sqrt((k + 0.5) / 20.0);
            const double phi = 2 * M_PI * k / 20.0;
            pts.push_back(z0 + rho * Complex{std::cos(phi), std::sin(phi)});
        }
        const Eigen::MatrixXd U = basis->sample(pts);
        const Eigen::Map<const Eigen::VectorXd> c(sol.coefficients.data(),
                                                  sol.coefficients.size());
        const Eigen::VectorXd uv = U * c;
        double worst = 0.0;
        for (size_t i = 0; i < pts.size(); ++i)
            worst = std::max(worst, std::abs(uv(i) - classical(pts[i])));

        BvpProblem mprob;
        mprob.kind = BvpCase::Meridional;
        mprob.domain = Domain::rectangle(1, 2, -0.5, 0.5);
        mprob.profile = RadialProfile::reciprocal(1.0, 0.3, 3.0);
        mprob.z0 = {1.5, 0.0};
        mprob.n_max = 6;
        auto mdata = [&](Complex z) {
            const Complex w = z - mprob.z0;
            return std::exp(w.real()) * std::cos(w.imag());
        };
        mprob.boundary =
            sample_boundary(mprob.domain, default_collocation_count(mprob.n_max), mdata);
        const auto mbasis = make_basis(mprob);
        const BvpSolution msol = solve(mprob, *mbasis);
        const auto mclassical = harmonic_collocation(mprob.boundary, mprob.z0, mprob.n_max);
        std::vector<Complex> mpts;
        for (int k = 0; k < 16; ++k)
            mpts.push_back(mprob.z0 + std::polar(0.3, 2 * M_PI * k / 16.0));
        const Eigen::MatrixXd MU = mbasis->sample(mpts);
        const Eigen::Map<const Eigen::VectorXd> mc(msol.coefficients.data(),
                                                   msol.coefficients.size());
        const Eigen::VectorXd muv = MU * mc;
        for (size_t i = 0; i < mpts.size(); ++i)
            worst = std::max(worst, std::abs(muv(i) - mclassical(mpts[i])));

        out.push_back({"cross-oracle-harmonic",
                       fmt_params({{"cases", "transverse eps=1, meridional eps=1/x"}}), worst,
                       1e-8, worst <= 1e-8});
    }

    return out;
}

} // namespace vekua
