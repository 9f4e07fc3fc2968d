#include "vekua/config.hpp"

#include <cmath>

#include "vekua/meridional.hpp"

namespace vekua {

namespace {

double require_number(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError("missing or non-numeric field '" + key + "'");
    return j.at(key).get<double>();
}

} // namespace

Complex complex_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(what + " must be a [x, y] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

RadialProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("profile: missing 'kind'");
    const std::string kind = j.at("kind").get<std::string>();

    auto range = [&](double lo_default, double hi_default, bool required) {
        if (!j.contains("range")) {
            if (required) throw ConfigError("profile: '" + kind + "' requires a 'range'");
            return std::pair{lo_default, hi_default};
        }
        const Json& r = j.at("range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
            throw ConfigError("profile: 'range' must be [r_min, r_max]");
        return std::pair{r[0].get<double>(), r[1].get<double>()};
    };

    try {
        if (kind == "constant") {
            const auto [lo, hi] = range(0.0, 1e9, false);
            return RadialProfile::constant(require_number(j, "c"), lo, hi);
        }
        if (kind == "power") {
            const auto [lo, hi] = range(0.0, 0.0, true);
            return RadialProfile::power(require_number(j, "c"), require_number(j, "alpha"), lo, hi);
        }
        if (kind == "exponential") {
            const auto [lo, hi] = range(0.0, 100.0, false);
            return RadialProfile::exponential(require_number(j, "c"), require_number(j, "alpha"),
                                              lo, hi);
        }
        if (kind == "reciprocal") {
            const auto [lo, hi] = range(0.0, 0.0, true);
            return RadialProfile::reciprocal(require_number(j, "c"), lo, hi);
        }
        if (kind == "table") {
            if (!j.contains("points") || !j.at("points").is_array())
                throw ConfigError("profile: table requires 'points'");
            std::vector<std::pair<double, double>> pts;
            for (const Json& e : j.at("points")) {
                if (!e.is_array() || e.size() != 2)
                    throw ConfigError("profile: table points must be [r, eps] pairs");
                pts.emplace_back(e[0].get<double>(), e[1].get<double>());
            }
            return RadialProfile::table(std::move(pts));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("profile: ") + e.what());
    }
    throw ConfigError("profile: unknown kind '" + kind + "'");
}

Json profile_to_json(const RadialProfile& p) {
    Json j;
    switch (p.kind()) {
    case RadialProfile::Kind::Constant:
        j["kind"] = "constant";
        j["c"] = p.c();
        break;
    case RadialProfile::Kind::Power:
        j["kind"] = "power";
        j["c"] = p.c();
        j["alpha"] = p.alpha();
        break;
    case RadialProfile::Kind::Exponential:
        j["kind"] = "exponential";
        j["c"] = p.c();
        j["alpha"] = p.alpha();
        break;
    case RadialProfile::Kind::Reciprocal:
        j["kind"] = "reciprocal";
        j["c"] = p.c();
        break;
    case RadialProfile::Kind::Table: {
        j["kind"] = "table";
        Json pts = Json::array();
        for (const auto& [r, e] : p.points()) pts.push_back({r, e});
        j["points"] = pts;
        break;
    }
    }
    j["range"] = {p.r_min(), p.r_max()};
    return j;
}

Domain domain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("domain: missing 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "rectangle") {
            const Json &x = j.at("x"), &y = j.at("y");
            if (!x.is_array() || x.size() != 2 || !y.is_array() || y.size() != 2)
                throw ConfigError("domain: rectangle requires 'x' and 'y' extents");
            return Domain::rectangle(x[0].get<double>(), x[1].get<double>(), y[0].get<double>(),
                                     y[1].get<double>());
        }
        if (kind == "disk") {
            return Domain::disk(complex_from_json(j.at("center"), "domain center"),
                                require_number(j, "radius"));
        }
        if (kind == "polygon") {
            if (!j.contains("vertices") || !j.at("vertices").is_array())
                throw ConfigError("domain: polygon requires 'vertices'");
            std::vector<Complex> verts;
            for (const Json& v : j.at("vertices"))
                verts.push_back(complex_from_json(v, "polygon vertex"));
            return Domain::polygon(std::move(verts));
        }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("domain: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("domain: ") + e.what());
    }
    throw ConfigError("domain: unknown kind '" + kind + "'");
}

PathOptions path_options_from_json(const Json& j) {
    PathOptions opt;
    if (j.is_null()) return opt;
    if (!j.is_object()) throw ConfigError("path: must be an object");
    if (j.contains("nodes_per_segment")) opt.nodes_per_segment = j.at("nodes_per_segment").get<int>();
    if (j.contains("max_arc_step_deg"))
        opt.max_arc_step = j.at("max_arc_step_deg").get<double>() * M_PI / 180.0;
    if (j.contains("radial_splits")) opt.radial_splits = j.at("radial_splits").get<int>();
    if (j.contains("rule")) {
        const std::string r = j.at("rule").get<std::string>();
        if (r == "gauss-legendre") opt.rule = QuadRule::GaussLegendre;
        else if (r == "simpson") opt.rule = QuadRule::Simpson;
        else throw ConfigError("path: unknown rule '" + r + "'");
    }
    if (opt.nodes_per_segment < 1) throw ConfigError("path: nodes_per_segment must be positive");
    return opt;
}

BvpProblem bvp_problem_from_json(const Json& j) {
    BvpProblem prob;
    if (!j.contains("case") || !j.at("case").is_string())
        throw ConfigError("bvp: missing 'case'");
    const std::string kase = j.at("case").get<std::string>();
    if (kase == "transverse") prob.kind = BvpCase::Transverse;
    else if (kase == "meridional") prob.kind = BvpCase::Meridional;
    else throw ConfigError("bvp: unknown case '" + kase + "'");

    if (!j.contains("profile")) throw ConfigError("bvp: missing 'profile'");
    prob.profile = profile_from_json(j.at("profile"));
    if (!j.contains("domain")) throw ConfigError("bvp: missing 'domain'");
    prob.domain = domain_from_json(j.at("domain"));

    prob.z0 = j.contains("z0") ? complex_from_json(j.at("z0"), "z0") : prob.domain.centroid();
    if (!j.contains("n_max") || !j.at("n_max").is_number_integer())
        throw ConfigError("bvp: missing integer 'n_max'");
    prob.n_max = j.at("n_max").get<int>();
    if (prob.n_max < 0) throw ConfigError("bvp: n_max must be >= 0");

    if (!j.contains("boundary")) throw ConfigError("bvp: missing 'boundary'");
    const Json& b = j.at("boundary");
    if (b.is_object() && b.contains("values")) {
        const double tol = 1e-9 * prob.domain.diameter();
        for (const Json& row : b.at("values")) {
            if (!row.is_array() || row.size() != 3)
                throw ConfigError("bvp: boundary values must be [x, y, value] triples");
            const Complex pt{row[0].get<double>(), row[1].get<double>()};
            if (prob.domain.boundary_distance(pt) > tol)
                throw ConfigError("bvp: boundary point (" + std::to_string(pt.real()) + ", " +
                                  std::to_string(pt.imag()) + ") is not on the domain boundary");
            prob.boundary.push_back({pt, row[2].get<double>()});
        }
        if (prob.boundary.empty()) throw ConfigError("bvp: empty boundary value list");
    } else if (b.is_object() && b.contains("preset")) {
        const auto data = boundary_preset(b.at("preset").get<std::string>(), b, prob);
        double oversampling = 4.0;
        if (j.contains("oversampling")) oversampling = j.at("oversampling").get<double>();
        int samples = b.contains("samples") ? b.at("samples").get<int>() : 0;
        if (samples <= 0) samples = default_collocation_count(prob.n_max, oversampling);
        prob.boundary = sample_boundary(prob.domain, samples, data);
    } else {
        throw ConfigError("bvp: boundary needs 'values' or 'preset'");
    }
    return prob;
}

std::function<double(Complex)> boundary_preset(const std::string& name, const Json& params,
                                               const BvpProblem& problem) {
    if (name == "r_pow_cos") {
        const double beta =
            params.contains("beta") ? params.at("beta").get<double>() : std::sqrt(2.0) - 1.0;
        return [beta](Complex z) { return std::pow(std::abs(z), beta) * std::cos(std::arg(z)); };
    }
    if (name == "harmonic_saddle")
        return [](Complex z) { return z.real() * z.real() - z.imag() * z.imag(); };
    if (name == "axial_uniform") return [](Complex z) { return z.imag(); };
    if (name == "constant") {
        const double v = params.contains("value") ? params.at("value").get<double>() : 1.0;
        return [v](Complex) { return v; };
    }
    if (name == "formal_power") {
        const int n = params.contains("n") ? params.at("n").get<int>() : 1;
        const Coeff coeff = (params.contains("coeff") && params.at("coeff") == "i") ? Coeff::I
                                                                                     : Coeff::One;
        if (n < 0 || n > problem.n_max)
            throw ConfigError("boundary preset 'formal_power': n must be in [0, n_max]");
        if (problem.kind == BvpCase::Meridional) {
            auto basis = std::make_shared<MeridionalPowerBasis>(problem.profile, problem.domain,
                                                                problem.z0, problem.n_max);
            const Complex z0 = problem.z0;
            return [basis, n, coeff, z0](Complex z) {
                return eval_meridional_power(basis->sequence(), n, coeff_value(coeff), z0.imag(), z)
                    .real();
            };
        }
        auto seq = std::make_shared<GeneratingSequence>(transverse_sequence(problem.profile));
        const RadialProfile prof = problem.profile;
        const Complex z0 = problem.z0;
        return [seq, prof, n, coeff, z0](Complex z) {
            const Complex Z = formal_power(*seq, z0, n, coeff, z);
            return Z.real() / prof.sqrt_at(std::abs(z));
        };
    }
    throw ConfigError("unknown boundary preset '" + name + "'");
}

uint64_t config_hash(const Json& j) {
    const std::string s = j.dump();
    uint64_t h = 1469598103934665603ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash_hex(const Json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%08llx",
                  static_cast<unsigned long long>(config_hash(j) & 0xffffffffULL));
    return buf;
}

} // namespace vekua
