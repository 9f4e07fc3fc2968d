#include "vekua/meridional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vekua {

std::vector<double> XSequence::make_grid(double lo, double hi, double x0, int count) {
    if (!(lo < hi) || x0 < lo || x0 > hi)
        throw std::invalid_argument("XSequence::make_grid: need lo < hi and x0 inside");
    std::vector<double> g;
    g.reserve(count + 1);
    for (int j = 0; j < count; ++j) g.push_back(lo + (hi - lo) * j / (count - 1));
    g.push_back(x0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end(),
                        [&](double a, double b) { return std::abs(a - b) < 1e-12 * (hi - lo); }),
            g.end());
    // make_grid may have nudged out a point nearly coincident with x0; ensure exact membership
    auto it = std::lower_bound(g.begin(), g.end(), x0);
    if (it == g.end() || std::abs(*it - x0) > 0) {
        // snap the nearest entry to x0
        auto nearest = it;
        if (it == g.end() || (it != g.begin() && x0 - *(it - 1) < *it - x0)) nearest = it - 1;
        *nearest = x0;
    }
    return g;
}

XSequence::XSequence(const RadialProfile& profile, double x0, std::span<const double> grid,
                     int n_max, int nodes_per_panel)
    : profile_(profile), x0_(x0), n_max_(n_max), rule_(&PanelRule::get(nodes_per_panel)) {
    if (!(x0 > 0)) throw std::domain_error("XSequence: x0 must be positive");
    if (n_max < 0) throw std::invalid_argument("XSequence: n_max must be >= 0");
    if (n_max > 60) throw std::invalid_argument("XSequence: n_max capped at 60");
    if (grid.size() < 2) throw std::invalid_argument("XSequence: grid needs >= 2 points");
    for (size_t j = 0; j + 1 < grid.size(); ++j)
        if (!(grid[j] < grid[j + 1]))
            throw std::invalid_argument("XSequence: grid must be strictly increasing");
    if (!(grid.front() > 0)) throw std::domain_error("XSequence: grid must stay in x > 0");
    boundaries_.assign(grid.begin(), grid.end());
    if (std::find(boundaries_.begin(), boundaries_.end(), x0) == boundaries_.end())
        throw std::invalid_argument("XSequence: grid must contain x0 as a grid point");

    const size_t K = boundaries_.size() - 1;
    const int p = rule_->p;
    nodes_.reserve(K * p);
    for (size_t j = 0; j < K; ++j) {
        const double mid = 0.5 * (boundaries_[j] + boundaries_[j + 1]);
        const double half = 0.5 * (boundaries_[j + 1] - boundaries_[j]);
        for (int k = 0; k < p; ++k) nodes_.push_back(mid + rule_->nodes[k] * half);
    }

    // sigma(t) = t*eps(t) and its reciprocal at every node
    std::vector<double> sigma(nodes_.size()), inv_sigma(nodes_.size());
    for (size_t i = 0; i < nodes_.size(); ++i) {
        sigma[i] = nodes_[i] * profile_(nodes_[i]);
        inv_sigma[i] = 1.0 / sigma[i];
    }

    const size_t x0_idx =
        static_cast<size_t>(std::find(boundaries_.begin(), boundaries_.end(), x0) -
                            boundaries_.begin());

    X_b_.assign(n_max + 1, {});
    X_n_.assign(n_max + 1, {});
    Xt_b_.assign(n_max + 1, {});
    Xt_n_.assign(n_max + 1, {});
    X_b_[0].assign(K + 1, 1.0);
    Xt_b_[0].assign(K + 1, 1.0);
    X_n_[0].assign(nodes_.size(), 1.0);
    Xt_n_[0].assign(nodes_.size(), 1.0);

    std::vector<double> integrand(nodes_.size());
    auto advance = [&](const std::vector<double>& prev_nodes, bool use_inv, int n,
                       std::vector<double>& out_b, std::vector<double>& out_n) {
        const std::vector<double>& w = use_inv ? inv_sigma : sigma;
        for (size_t i = 0; i < nodes_.size(); ++i) integrand[i] = prev_nodes[i] * w[i];
        CumulativeReal cum = cumulative_panels(boundaries_, integrand, *rule_);
        const double anchor = cum.at_boundaries[x0_idx];
        out_b.resize(K + 1);
        out_n.resize(nodes_.size());
        for (size_t j = 0; j <= K; ++j) out_b[j] = n * (cum.at_boundaries[j] - anchor);
        for (size_t i = 0; i < nodes_.size(); ++i) out_n[i] = n * (cum.at_nodes[i] - anchor);
    };

    for (int n = 1; n <= n_max; ++n) {
        const bool odd = (n % 2 == 1);
        advance(X_n_[n - 1], odd, n, X_b_[n], X_n_[n]);       // odd n: against 1/sigma
        advance(Xt_n_[n - 1], !odd, n, Xt_b_[n], Xt_n_[n]);   // companion: swapped
    }
}

double XSequence::eval(const std::vector<std::vector<double>>& at_b,
                       const std::vector<std::vector<double>>& at_n, int n, double x) const {
    if (n < 0 || n > n_max_) throw std::invalid_argument("XSequence: level out of range");
    if (!(x >= boundaries_.front() && x <= boundaries_.back()))
        throw std::domain_error("XSequence: x outside grid range");
    if (n == 0) return 1.0;
    auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
    size_t j = (it == boundaries_.begin()) ? 0 : static_cast<size_t>(it - boundaries_.begin()) - 1;
    if (j + 1 >= boundaries_.size()) j = boundaries_.size() - 2;
    const int p = rule_->p;
    std::vector<double> vals(p + 2);
    vals[0] = at_b[n][j];
    for (int k = 0; k < p; ++k) vals[k + 1] = at_n[n][j * p + k];
    vals[p + 1] = at_b[n][j + 1];
    const double mid = 0.5 * (boundaries_[j] + boundaries_[j + 1]);
    const double half = 0.5 * (boundaries_[j + 1] - boundaries_[j]);
    return panel_interpolate(*rule_, vals, (x - mid) / half);
}

double XSequence::X(int n, double x) const { return eval(X_b_, X_n_, n, x); }
double XSequence::Xt(int n, double x) const { return eval(Xt_b_, Xt_n_, n, x); }

Complex eval_meridional_power(const XSequence& xs, int n, Complex a, double y0, Complex z) {
    if (n < 0 || n > xs.n_max())
        throw std::invalid_argument("eval_meridional_power: n exceeds the built sequence");
    const double x = z.real();
    const double dy = z.imag() - y0;

    // Pascal row of binomials; n is capped at 60 upstream so entries are exact.
    std::vector<double> binom(n + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        for (int j = k - 1; j > 0; --j) binom[j] += binom[j - 1];

    Complex sx{}, sxt{};
    double dyk = 1.0;
    for (int k = 0; k <= n; ++k) {
        // i^k cycles through 1, i, -1, -i
        Complex ik;
        switch (k % 4) {
        case 0: ik = {1, 0}; break;
        case 1: ik = {0, 1}; break;
        case 2: ik = {-1, 0}; break;
        default: ik = {0, -1}; break;
        }
        const Complex common = binom[k] * dyk * ik;
        sx += common * xs.X(n - k, x);
        sxt += common * xs.Xt(n - k, x);
        dyk *= dy;
    }
    const double ap = a.real(), app = a.imag();
    if (n % 2 == 1) return ap * sx + Complex{0, 1} * app * sxt;
    return ap * sxt + Complex{0, 1} * app * sx;
}

MeridionalPowers::MeridionalPowers(std::shared_ptr<const XSequence> seq, Complex center)
    : xs(std::move(seq)), z0(center) {
    if (xs->x0() != z0.real())
        throw std::invalid_argument("MeridionalPowers: center abscissa must equal the sequence x0");
}

MeridionalField field_from_meridional(Complex w, const RadialProfile& profile, double x) {
    if (!(x > 0)) throw std::domain_error("field_from_meridional: requires x > 0");
    return {w.imag() / (x * profile(x)), w.real()};
}

} // namespace vekua
