#include "vekua/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "vekua/path.hpp"

namespace vekua {

namespace {

// P_l(t) and P'_l(t) by the Bonnet recurrence.
std::pair<double, double> legendre(int l, double t) {
    double p0 = 1.0, p1 = t;
    if (l == 0) return {1.0, 0.0};
    for (int k = 2; k <= l; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = l * (t * p1 - p0) / (t * t - 1.0);
    return {p1, dp};
}

} // namespace

void gauss_legendre(int p, std::vector<double>& nodes, std::vector<double>& weights) {
    if (p < 1) throw std::invalid_argument("gauss_legendre: node count must be positive");
    nodes.assign(p, 0.0);
    weights.assign(p, 0.0);
    const int half = (p + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_p.
        double t = std::cos(M_PI * (i + 0.75) / (p + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto [v, d] = legendre(p, t);
            dp = d;
            const double dt = v / d;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        auto [v, d] = legendre(p, t);
        (void)v;
        dp = d;
        nodes[i] = -t; // guesses start near +1, fill ascending from -1
        nodes[p - 1 - i] = t;
        const double w = 2.0 / ((1.0 - t * t) * dp * dp);
        weights[i] = w;
        weights[p - 1 - i] = w;
    }
    if (p % 2 == 1) nodes[p / 2] = 0.0;
    std::sort(nodes.begin(), nodes.end());
}

const PanelRule& PanelRule::get(int p) {
    static std::map<int, PanelRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    PanelRule rule;
    rule.p = p;
    gauss_legendre(p, rule.nodes, rule.weights);

    // partial[k][j] = sum_l I_l(nodes[k]) * A[l][j] with
    //   A[l][j] = (2l+1)/2 * w_j * P_l(t_j)   (nodal values -> Legendre coefficients)
    //   I_l(t)  = integral -1..t of P_l = (P_{l+1}(t) - P_{l-1}(t)) / (2l+1), I_0 = t+1.
    std::vector<double> A(static_cast<size_t>(p) * p);
    for (int l = 0; l < p; ++l)
        for (int j = 0; j < p; ++j)
            A[static_cast<size_t>(l) * p + j] =
                (2.0 * l + 1.0) / 2.0 * rule.weights[j] * legendre(l, rule.nodes[j]).first;

    rule.partial.assign(static_cast<size_t>(p) * p, 0.0);
    for (int k = 0; k < p; ++k) {
        const double t = rule.nodes[k];
        for (int l = 0; l < p; ++l) {
            double Il;
            if (l == 0) {
                Il = t + 1.0;
            } else {
                Il = (legendre(l + 1, t).first - legendre(l - 1, t).first) / (2.0 * l + 1.0);
            }
            for (int j = 0; j < p; ++j)
                rule.partial[static_cast<size_t>(k) * p + j] += Il * A[static_cast<size_t>(l) * p + j];
        }
    }

    rule.interp_nodes.reserve(p + 2);
    rule.interp_nodes.push_back(-1.0);
    rule.interp_nodes.insert(rule.interp_nodes.end(), rule.nodes.begin(), rule.nodes.end());
    rule.interp_nodes.push_back(1.0);
    const int q = p + 2;
    rule.interp_weights.assign(q, 1.0);
    for (int i = 0; i < q; ++i) {
        double w = 1.0;
        for (int k = 0; k < q; ++k) {
            if (k == i) continue;
            w *= (rule.interp_nodes[i] - rule.interp_nodes[k]);
        }
        rule.interp_weights[i] = 1.0 / w;
    }

    auto [pos, inserted] = cache.emplace(p, std::move(rule));
    (void)inserted;
    return pos->second;
}

double panel_interpolate(const PanelRule& rule, std::span<const double> values, double t) {
    const int q = rule.p + 2;
    if (static_cast<int>(values.size()) != q)
        throw std::invalid_argument("panel_interpolate: value count mismatch");
    double num = 0.0, den = 0.0;
    for (int i = 0; i < q; ++i) {
        const double d = t - rule.interp_nodes[i];
        if (d == 0.0) return values[i];
        const double c = rule.interp_weights[i] / d;
        num += c * values[i];
        den += c;
    }
    return num / den;
}

CumulativeReal cumulative_panels(std::span<const double> boundaries,
                                 std::span<const double> node_values, const PanelRule& rule) {
    const int K = static_cast<int>(boundaries.size()) - 1;
    if (K < 0 || static_cast<int>(node_values.size()) != K * rule.p)
        throw std::invalid_argument("cumulative_panels: size mismatch");
    CumulativeReal out;
    out.at_boundaries.assign(K + 1, 0.0);
    out.at_nodes.assign(node_values.size(), 0.0);
    double acc = 0.0;
    for (int j = 0; j < K; ++j) {
        const double half = 0.5 * (boundaries[j + 1] - boundaries[j]);
        const double* f = node_values.data() + static_cast<size_t>(j) * rule.p;
        for (int k = 0; k < rule.p; ++k) {
            double part = 0.0;
            for (int i = 0; i < rule.p; ++i)
                part += rule.partial[static_cast<size_t>(k) * rule.p + i] * f[i];
            out.at_nodes[static_cast<size_t>(j) * rule.p + k] = acc + half * part;
        }
        double full = 0.0;
        for (int i = 0; i < rule.p; ++i) full += rule.weights[i] * f[i];
        acc += half * full;
        out.at_boundaries[j + 1] = acc;
    }
    return out;
}

CumulativeComplex cumulative_panels(std::span<const Complex> boundaries,
                                    std::span<const Complex> node_values, const PanelRule& rule) {
    const int K = static_cast<int>(boundaries.size()) - 1;
    if (K < 0 || node_values.size() != static_cast<size_t>(K) * rule.p)
        throw std::invalid_argument("cumulative_panels: size mismatch");
    CumulativeComplex out;
    out.at_boundaries.assign(K + 1, Complex{});
    out.at_nodes.assign(node_values.size(), Complex{});
    Complex acc{};
    for (int j = 0; j < K; ++j) {
        const Complex half = 0.5 * (boundaries[j + 1] - boundaries[j]);
        const Complex* f = node_values.data() + static_cast<size_t>(j) * rule.p;
        for (int k = 0; k < rule.p; ++k) {
            Complex part{};
            for (int i = 0; i < rule.p; ++i)
                part += rule.partial[static_cast<size_t>(k) * rule.p + i] * f[i];
            out.at_nodes[static_cast<size_t>(j) * rule.p + k] = acc + half * part;
        }
        Complex full{};
        for (int i = 0; i < rule.p; ++i) full += rule.weights[i] * f[i];
        acc += half * full;
        out.at_boundaries[j + 1] = acc;
    }
    return out;
}

namespace {

Complex integrate_once(const std::function<Complex(Complex)>& w, const PathSpec& path, int p) {
    Complex total{};
    const auto& verts = path.points();
    if (path.rule() == QuadRule::GaussLegendre) {
        std::vector<double> nodes, weights;
        gauss_legendre(p, nodes, weights);
        for (size_t s = 0; s + 1 < verts.size(); ++s) {
            const Complex a = verts[s], b = verts[s + 1];
            const Complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
            Complex acc{};
            for (int k = 0; k < p; ++k) {
                const Complex z = mid + nodes[k] * half;
                const Complex f = w(z);
                if (!is_finite(f))
                    throw std::runtime_error("line_integral: integrand not finite at node");
                acc += weights[k] * f;
            }
            total += half * acc;
        }
    } else {
        // composite Simpson with an even interval count per segment
        int intervals = std::max(2, p - (p % 2));
        for (size_t s = 0; s + 1 < verts.size(); ++s) {
            const Complex a = verts[s], b = verts[s + 1];
            const Complex h = (b - a) / static_cast<double>(intervals);
            Complex acc = w(a) + w(b);
            for (int k = 1; k < intervals; ++k) {
                const Complex f = w(a + static_cast<double>(k) * h);
                if (!is_finite(f))
                    throw std::runtime_error("line_integral: integrand not finite at node");
                acc += (k % 2 == 1 ? 4.0 : 2.0) * f;
            }
            total += acc * h / 3.0;
        }
    }
    return total;
}

} // namespace

QuadratureResult line_integral(const std::function<Complex(Complex)>& w, const PathSpec& path) {
    const int p = path.nodes_per_segment();
    const Complex coarse = integrate_once(w, path, p);
    const Complex fine = integrate_once(w, path, 2 * p);
    QuadratureResult res;
    res.value = fine;
    res.node_count = static_cast<int>(path.points().size() - 1) * 3 * p;
    res.refinement_estimate = std::abs(fine - coarse);
    return res;
}

std::vector<double> cumulative_integral(const std::function<double(double)>& g, double x0,
                                        std::span<const double> grid, QuadRule rule,
                                        int nodes_per_panel) {
    if (grid.empty() || grid[0] != x0)
        throw std::invalid_argument("cumulative_integral: grid must start at x0");
    for (size_t j = 0; j + 1 < grid.size(); ++j)
        if (!(grid[j] < grid[j + 1]))
            throw std::invalid_argument("cumulative_integral: grid must be strictly increasing");

    std::vector<double> out(grid.size(), 0.0);
    if (rule == QuadRule::GaussLegendre) {
        const PanelRule& pr = PanelRule::get(nodes_per_panel);
        double acc = 0.0;
        for (size_t j = 0; j + 1 < grid.size(); ++j) {
            const double mid = 0.5 * (grid[j] + grid[j + 1]);
            const double half = 0.5 * (grid[j + 1] - grid[j]);
            double panel = 0.0;
            for (int k = 0; k < pr.p; ++k) panel += pr.weights[k] * g(mid + pr.nodes[k] * half);
            acc += half * panel;
            out[j + 1] = acc;
        }
    } else {
        const int intervals = std::max(2, nodes_per_panel - (nodes_per_panel % 2));
        double acc = 0.0;
        for (size_t j = 0; j + 1 < grid.size(); ++j) {
            const double h = (grid[j + 1] - grid[j]) / intervals;
            double s = g(grid[j]) + g(grid[j + 1]);
            for (int k = 1; k < intervals; ++k)
                s += (k % 2 == 1 ? 4.0 : 2.0) * g(grid[j] + k * h);
            acc += s * h / 3.0;
            out[j + 1] = acc;
        }
    }
    return out;
}

} // namespace vekua
