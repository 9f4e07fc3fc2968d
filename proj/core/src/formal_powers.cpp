#include "vekua/formal_powers.hpp"

#include <cmath>
#include <stdexcept>

namespace vekua {

Complex fg_integral(const GeneratingSequence& seq, int m, const std::function<Complex(Complex)>& w,
                    const PathSpec& path) {
    const QuadratureResult ig =
        line_integral([&](Complex z) { return seq.adjoint(m, z).G_star * w(z); }, path);
    const QuadratureResult if_ =
        line_integral([&](Complex z) { return seq.adjoint(m, z).F_star * w(z); }, path);
    const PairValue p = seq.pair(m, path.end());
    return p.F * ig.value.real() + p.G * if_.value.real();
}

FormalPowerPath::FormalPowerPath(const GeneratingSequence& seq, Complex z0, int n_max,
                                 PathSpec path)
    : z0_(z0), n_max_(n_max), path_(std::move(path)), panels_(panelize(path_)) {
    if (n_max < 0) throw std::invalid_argument("FormalPowerPath: n_max must be >= 0");
    if (path_.start() != z0)
        throw std::invalid_argument("FormalPowerPath: path must start at the center");

    const PanelRule& rule = PanelRule::get(panels_.nodes_per_panel);
    const size_t nb = panels_.boundaries.size();
    const size_t nn = panels_.nodes.size();

    // level data reused across exponents
    const int max_level = n_max;
    std::vector<std::vector<PairValue>> pair_b(max_level + 1), pair_n(max_level + 1);
    std::vector<std::vector<AdjointValue>> adj_n(max_level + 1);
    for (int m = 0; m <= max_level; ++m) {
        pair_b[m].reserve(nb);
        for (const Complex& z : panels_.boundaries) pair_b[m].push_back(seq.pair(m, z));
        pair_n[m].reserve(nn);
        adj_n[m].reserve(nn);
        for (const Complex& z : panels_.nodes) {
            pair_n[m].push_back(seq.pair(m, z));
            adj_n[m].push_back(seq.adjoint(m, z));
        }
    }

    at_boundaries_.assign(n_max + 1, {});
    std::vector<Complex> cur_b(nb), cur_n(nn), next_b(nb), next_n(nn);
    std::vector<Complex> ig(nn), if_(nn);

    for (int n = 0; n <= n_max; ++n) {
        for (Coeff coeff : {Coeff::One, Coeff::I}) {
            const Complex a = coeff_value(coeff);
            // seed: exponent-0 power of level n, the real combination of
            // (F_n, G_n) reproducing a at the center (= boundaries[0])
            const PairValue p0 = pair_b[n][0];
            const double det = std::imag(std::conj(p0.F) * p0.G);
            if (!(det > 0.0))
                throw std::domain_error("FormalPowerPath: pair condition fails at the center");
            const double lambda = (a.real() * p0.G.imag() - a.imag() * p0.G.real()) / det;
            const double mu = (a.imag() * p0.F.real() - a.real() * p0.F.imag()) / det;
            for (size_t i = 0; i < nb; ++i)
                cur_b[i] = lambda * pair_b[n][i].F + mu * pair_b[n][i].G;
            for (size_t i = 0; i < nn; ++i)
                cur_n[i] = lambda * pair_n[n][i].F + mu * pair_n[n][i].G;

            for (int m = n - 1; m >= 0; --m) {
                const double j = static_cast<double>(n - m);
                for (size_t i = 0; i < nn; ++i) {
                    ig[i] = adj_n[m][i].G_star * cur_n[i];
                    if_[i] = adj_n[m][i].F_star * cur_n[i];
                }
                const CumulativeComplex SG = cumulative_panels(panels_.boundaries, ig, rule);
                const CumulativeComplex SF = cumulative_panels(panels_.boundaries, if_, rule);
                for (size_t i = 0; i < nb; ++i)
                    next_b[i] = j * (pair_b[m][i].F * SG.at_boundaries[i].real() +
                                     pair_b[m][i].G * SF.at_boundaries[i].real());
                for (size_t i = 0; i < nn; ++i)
                    next_n[i] = j * (pair_n[m][i].F * SG.at_nodes[i].real() +
                                     pair_n[m][i].G * SF.at_nodes[i].real());
                std::swap(cur_b, next_b);
                std::swap(cur_n, next_n);
            }
            at_boundaries_[n][coeff == Coeff::One ? 0 : 1] = cur_b;
        }
    }
}

Complex FormalPowerPath::at_end(int n, Coeff c) const {
    return at_boundaries_.at(n)[c == Coeff::One ? 0 : 1].back();
}

Complex FormalPowerPath::at_boundary(int n, Coeff c, size_t j) const {
    return at_boundaries_.at(n)[c == Coeff::One ? 0 : 1].at(j);
}

FormalPowerTable FormalPowerTable::build(const GeneratingSequence& seq,
                                         const RadialProfile& profile, Complex z0, int n_max,
                                         std::span<const Complex> targets, const Domain& domain,
                                         const PowerTableOptions& opt) {
    if (n_max > opt.n_cap)
        throw std::invalid_argument("FormalPowerTable: n_max exceeds the configured cap");
    if (domain.contains_origin())
        throw std::domain_error("FormalPowerTable: domain must not contain the origin");
    if (!domain.contains(z0))
        throw std::domain_error("FormalPowerTable: center must lie in the domain");

    PathOptions popt = opt.path;
    if (popt.min_origin_distance == 0.0)
        popt.min_origin_distance = 1e-6 * domain.diameter();

    FormalPowerTable table;
    table.z0_ = z0;
    table.n_max_ = n_max;
    table.targets_.assign(targets.begin(), targets.end());
    table.estimates_.assign(n_max + 1, std::vector<double>(targets.size(), 0.0));

    for (size_t t = 0; t < targets.size(); ++t) {
        const Complex z = targets[t];
        if (!domain.contains(z))
            throw std::domain_error("FormalPowerTable: target outside the domain");
        PathSpec path = log_polar_path(z0, z, popt);
        const auto [lo, hi] = path.radial_range();
        if (lo < profile.r_min() || hi > profile.r_max())
            throw std::domain_error("FormalPowerTable: path leaves the profile validity range");
        FormalPowerPath fine(seq, z0, n_max, path.refined(2));
        if (opt.with_refinement) {
            FormalPowerPath coarse(seq, z0, n_max, path);
            for (int n = 0; n <= n_max; ++n) {
                double est = 0.0;
                for (Coeff c : {Coeff::One, Coeff::I})
                    est = std::max(est, std::abs(fine.at_end(n, c) - coarse.at_end(n, c)));
                table.estimates_[n][t] = est;
            }
        }
        table.builds_.push_back(std::move(fine));
    }
    return table;
}

Complex FormalPowerTable::value(int n, Coeff c, size_t target) const {
    return builds_.at(target).at_end(n, c);
}

double FormalPowerTable::refinement_estimate(int n, size_t target) const {
    return estimates_.at(n).at(target);
}

Complex formal_power(const GeneratingSequence& seq, Complex z0, int n, Coeff c, Complex z,
                     const PathOptions& opt) {
    FormalPowerPath b(seq, z0, n, log_polar_path(z0, z, opt));
    return b.at_end(n, c);
}

PowerWithEstimate formal_power_along(const GeneratingSequence& seq, Complex z0, int n, Coeff c,
                                     const PathSpec& path) {
    FormalPowerPath coarse(seq, z0, n, path);
    FormalPowerPath fine(seq, z0, n, path.refined(2));
    return {fine.at_end(n, c), std::abs(fine.at_end(n, c) - coarse.at_end(n, c))};
}

} // namespace vekua
