// Command-line front end: builds formal-power tables, solves collocation
// problems, runs the verification battery, and exports CSV/JSON artifacts.
// Artifact names carry a hash of the effective configuration so identical
// configs map to identical files.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vekua/bvp.hpp"
#include "vekua/config.hpp"
#include "vekua/csv.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/meridional.hpp"
#include "vekua/verify.hpp"

namespace fs = std::filesystem;
using namespace vekua;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

Json load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    Json j;
    try {
        j = Json::parse(is);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    return j;
}

void apply_overrides(Json& config, const std::vector<std::string>& sets, int n_max_override) {
    for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        try {
            config[key] = Json::parse(value); // numbers, booleans, arrays
        } catch (const Json::exception&) {
            config[key] = value; // plain string
        }
    }
    if (n_max_override >= 0) config["n_max"] = n_max_override;
}

std::vector<Complex> targets_from_config(const Json& j) {
    std::vector<Complex> out;
    if (!j.contains("targets") || !j.at("targets").is_array() || j.at("targets").empty())
        throw ConfigError("config needs a non-empty 'targets' array of [x, y] pairs");
    for (const Json& t : j.at("targets")) out.push_back(complex_from_json(t, "target"));
    return out;
}

int cmd_powers_meridional(const Json& config, const fs::path& out_dir) {
    const RadialProfile profile = profile_from_json(config.at("profile"));
    const Complex z0 = complex_from_json(config.at("z0"), "z0");
    if (!config.contains("grid")) throw ConfigError("powers-meridional: missing 'grid'");
    const Json& g = config.at("grid");
    const double lo = g.at("min").get<double>(), hi = g.at("max").get<double>();
    const int points = g.contains("points") ? g.at("points").get<int>() : 512;
    const int n_max = config.at("n_max").get<int>();
    const auto targets = targets_from_config(config);

    const XSequence xs(profile, z0.real(), XSequence::make_grid(lo, hi, z0.real(), points), n_max);
    const std::string hash = config_hash_hex(config);

    {
        const std::vector<std::string> header = {"n", "x", "X", "Xt"};
        std::vector<std::vector<std::string>> rows;
        for (int n = 0; n <= n_max; ++n)
            for (size_t j = 0; j < xs.grid().size(); ++j)
                rows.push_back({std::to_string(n), csv_double(xs.grid()[j]),
                                csv_double(xs.X_at_grid(n, j)), csv_double(xs.Xt_at_grid(n, j))});
        write_csv(out_dir / ("xseq_" + hash + ".csv"), header, rows);
    }
    {
        const std::vector<std::string> header = {"n", "coeff", "x", "y", "re", "im"};
        std::vector<std::vector<std::string>> rows;
        for (int n = 0; n <= n_max; ++n)
            for (const Coeff c : {Coeff::One, Coeff::I})
                for (const Complex& z : targets) {
                    const Complex v = eval_meridional_power(xs, n, coeff_value(c), z0.imag(), z);
                    rows.push_back({std::to_string(n), coeff_label(c), csv_double(z.real()),
                                    csv_double(z.imag()), csv_double(v.real()),
                                    csv_double(v.imag())});
                }
        write_csv(out_dir / ("powers_meridional_" + hash + ".csv"), header, rows);
    }
    std::cout << "powers-meridional: wrote xseq_" << hash << ".csv and powers_meridional_" << hash
              << ".csv (n_max=" << n_max << ", grid points=" << xs.grid().size() << ")\n";
    return kExitOk;
}

int cmd_powers_transverse(const Json& config, const fs::path& out_dir) {
    const RadialProfile profile = profile_from_json(config.at("profile"));
    const Domain domain = domain_from_json(config.at("domain"));
    const Complex z0 = config.contains("z0") ? complex_from_json(config.at("z0"), "z0")
                                             : domain.centroid();
    const int n_max = config.at("n_max").get<int>();
    const auto targets = targets_from_config(config);

    PowerTableOptions opt;
    if (config.contains("path")) opt.path = path_options_from_json(config.at("path"));
    if (opt.path.rule != QuadRule::GaussLegendre)
        throw ConfigError("powers-transverse: the recursion requires the gauss-legendre rule");
    const GeneratingSequence seq = transverse_sequence(profile);
    const FormalPowerTable table =
        FormalPowerTable::build(seq, profile, z0, n_max, targets, domain, opt);

    const std::string hash = config_hash_hex(config);
    const std::vector<std::string> header = {"n", "coeff", "x", "y", "re", "im", "path_id"};
    std::vector<std::vector<std::string>> rows;
    double max_estimate = 0.0;
    for (int n = 0; n <= n_max; ++n)
        for (const Coeff c : {Coeff::One, Coeff::I})
            for (size_t t = 0; t < table.target_count(); ++t) {
                const auto& build = table.path_build(t);
                for (size_t j = 0; j < build.boundary_points().size(); ++j) {
                    const Complex z = build.boundary_points()[j];
                    const Complex v = build.at_boundary(n, c, j);
                    rows.push_back({std::to_string(n), coeff_label(c), csv_double(z.real()),
                                    csv_double(z.imag()), csv_double(v.real()),
                                    csv_double(v.imag()), std::to_string(t)});
                }
                max_estimate = std::max(max_estimate, table.refinement_estimate(n, t));
            }
    write_csv(out_dir / ("powers_transverse_" + hash + ".csv"), header, rows);
    std::cout << "powers-transverse: wrote powers_transverse_" << hash << ".csv (n_max=" << n_max
              << ", targets=" << targets.size()
              << ", max refinement estimate=" << max_estimate << ")\n";
    return kExitOk;
}

int cmd_solve_bvp(const Json& config, const fs::path& out_dir) {
    const BvpProblem problem = bvp_problem_from_json(config);
    const auto basis = make_basis(problem);
    double threshold = -1.0;
    if (config.contains("ls_threshold")) threshold = config.at("ls_threshold").get<double>();
    const BvpSolution sol = solve(problem, *basis, threshold);

    Json report;
    report["coefficients"] = sol.coefficients;
    report["boundary_residual_max"] = sol.boundary_residual_max;
    report["boundary_residual_rms"] = sol.boundary_residual_rms;
    report["condition_estimate"] = sol.condition_estimate;
    report["rank"] = sol.rank;
    report["basis_size"] = basis->size();
    report["flagged_ill_conditioned"] = sol.condition_estimate > 1e12;
    {
        std::ofstream os(out_dir / "bvp_solution.json");
        os << report.dump(2) << "\n";
    }

    // interior field map on a lattice clipped to the domain (with a margin so
    // the gradient stencils stay inside)
    int nx = 25, ny = 25;
    if (config.contains("eval_grid")) {
        nx = config.at("eval_grid").value("nx", 25);
        ny = config.at("eval_grid").value("ny", 25);
    }
    const double margin = 2e-5 * problem.domain.diameter();
    const auto [bx0, bx1, by0, by1] = problem.domain.bounding_box();
    std::vector<Complex> pts;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const Complex z{bx0 + (bx1 - bx0) * (i + 0.5) / nx,
                            by0 + (by1 - by0) * (j + 0.5) / ny};
            const Complex shifts[4] = {{margin, 0}, {-margin, 0}, {0, margin}, {0, -margin}};
            bool ok = problem.domain.contains(z);
            for (const Complex& s : shifts) ok = ok && problem.domain.contains(z + s);
            if (ok) pts.push_back(z);
        }
    const SolutionEvaluation eval = evaluate_solution(sol, problem, *basis, pts);
    const std::vector<std::string> header = {"x", "y", "u", "E1", "E2"};
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < pts.size(); ++i)
        rows.push_back({csv_double(pts[i].real()), csv_double(pts[i].imag()),
                        csv_double(eval.u[i]), csv_double(eval.e1[i]), csv_double(eval.e2[i])});
    write_csv(out_dir / "field_map.csv", header, rows);

    std::cout << "solve-bvp: basis size " << basis->size() << ", rank " << sol.rank
              << ", boundary residual max " << sol.boundary_residual_max << ", condition estimate "
              << sol.condition_estimate << (sol.condition_estimate > 1e12 ? " [FLAGGED]" : "")
              << "\n";
    return kExitOk;
}

int cmd_verify(const Json& config, const fs::path& out_dir) {
    std::vector<CheckResult> checks = run_default_verification();
    if (config.contains("checks")) {
        const auto& wanted = config.at("checks");
        std::vector<CheckResult> filtered;
        for (const CheckResult& c : checks)
            for (const Json& w : wanted)
                if (w.is_string() && w.get<std::string>() == c.name) filtered.push_back(c);
        checks = std::move(filtered);
        if (checks.empty()) throw ConfigError("verify: no known check names in 'checks'");
    }
    bool all_pass = true;
    Json report;
    report["checks"] = Json::array();
    for (const CheckResult& c : checks) {
        all_pass = all_pass && c.pass;
        report["checks"].push_back({{"name", c.name},
                                    {"parameters", c.parameters},
                                    {"metric", c.metric},
                                    {"threshold", c.threshold},
                                    {"pass", c.pass}});
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  metric=" << c.metric
                  << " threshold=" << c.threshold << "  (" << c.parameters << ")\n";
    }
    report["pass"] = all_pass;
    {
        std::ofstream os(out_dir / "verify_report.json");
        os << report.dump(2) << "\n";
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << " ("
              << checks.size() << " checks)\n";
    return all_pass ? kExitOk : kExitNumerical;
}

int cmd_report(const fs::path& out_dir) {
    bool verify_failed = false;
    bool found = false;
    const fs::path vr = out_dir / "verify_report.json";
    if (fs::exists(vr)) {
        found = true;
        std::ifstream is(vr);
        const Json j = Json::parse(is);
        std::cout << "verification report: " << (j.value("pass", false) ? "pass" : "FAIL") << "\n";
        for (const Json& c : j.at("checks"))
            std::cout << "  " << (c.value("pass", false) ? "[pass] " : "[FAIL] ")
                      << c.value("name", "") << " metric=" << c.value("metric", 0.0) << "\n";
        verify_failed = !j.value("pass", false);
    }
    const fs::path bs = out_dir / "bvp_solution.json";
    if (fs::exists(bs)) {
        found = true;
        std::ifstream is(bs);
        const Json j = Json::parse(is);
        std::cout << "bvp solution: rank " << j.value("rank", 0) << ", boundary residual max "
                  << j.value("boundary_residual_max", 0.0) << ", condition estimate "
                  << j.value("condition_estimate", 0.0)
                  << (j.value("flagged_ill_conditioned", false) ? " [FLAGGED]" : "") << "\n";
    }
    int csvs = 0;
    for (const auto& e : fs::directory_iterator(out_dir))
        if (e.path().extension() == ".csv") {
            ++csvs;
            found = true;
        }
    std::cout << csvs << " csv artifact(s) in " << out_dir.string() << "\n";
    if (!found) std::cout << "no artifacts found\n";
    return verify_failed ? kExitNumerical : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Formal-power bases and collocation solvers for axially symmetric media"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    int n_max_override = -1;
    std::vector<std::string> sets;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", config_path, "configuration JSON file");
        if (config_required) c->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--n-max", n_max_override, "override n_max");
        sub->add_option("--set", sets, "override a top-level config field, key=value");
    };

    auto* pm = app.add_subcommand("powers-meridional", "build meridional formal powers");
    add_common(pm, true);
    auto* pt = app.add_subcommand("powers-transverse", "build transverse formal powers");
    add_common(pt, true);
    auto* sb = app.add_subcommand("solve-bvp", "solve a Dirichlet problem by collocation");
    add_common(sb, true);
    auto* vf = app.add_subcommand("verify", "run the verification battery");
    add_common(vf, false);
    auto* rp = app.add_subcommand("report", "summarize artifacts in the output directory");
    rp->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(out_dir);
        Json config = Json::object();
        if (!config_path.empty()) config = load_config(config_path);
        apply_overrides(config, sets, n_max_override);
        std::cout << "effective config: " << config.dump() << "\n";

        if (pm->parsed()) return cmd_powers_meridional(config, out_dir);
        if (pt->parsed()) return cmd_powers_transverse(config, out_dir);
        if (sb->parsed()) return cmd_solve_bvp(config, out_dir);
        if (vf->parsed()) return cmd_verify(config, out_dir);
        if (rp->parsed()) return cmd_report(out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
