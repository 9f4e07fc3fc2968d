#include "vekua/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vekua {

namespace {
double segment_origin_distance(Complex a, Complex b) {
    const Complex e = b - a;
    const double len2 = std::norm(e);
    if (len2 == 0.0) return std::abs(a);
    double t = -(a.real() * e.real() + a.imag() * e.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(a + t * e);
}
} // namespace

PathSpec::PathSpec(Complex start, std::vector<Complex> vertices, int nodes_per_segment,
                   QuadRule rule, double min_origin_distance)
    : nodes_per_segment_(nodes_per_segment), rule_(rule),
      min_origin_distance_(min_origin_distance) {
    if (nodes_per_segment < 1)
        throw std::invalid_argument("PathSpec: nodes_per_segment must be positive");
    if (!is_finite(start)) throw std::invalid_argument("PathSpec: non-finite start");
    points_.reserve(vertices.size() + 1);
    points_.push_back(start);
    for (const Complex& v : vertices) {
        if (!is_finite(v)) throw std::invalid_argument("PathSpec: non-finite vertex");
        if (v == points_.back()) continue; // drop degenerate segments
        points_.push_back(v);
    }
    if (min_origin_distance_ > 0.0) {
        for (size_t s = 0; s + 1 < points_.size(); ++s) {
            if (segment_origin_distance(points_[s], points_[s + 1]) < min_origin_distance_)
                throw std::domain_error("PathSpec: segment passes within the origin exclusion radius");
        }
    }
}

PathSpec PathSpec::refined(int factor) const {
    PathSpec copy = *this;
    copy.nodes_per_segment_ *= factor;
    return copy;
}

double PathSpec::origin_distance() const {
    double d = std::abs(points_.front());
    for (size_t s = 0; s + 1 < points_.size(); ++s)
        d = std::min(d, segment_origin_distance(points_[s], points_[s + 1]));
    return d;
}

std::pair<double, double> PathSpec::radial_range() const {
    double lo = std::abs(points_.front()), hi = lo;
    for (size_t s = 0; s + 1 < points_.size(); ++s) {
        lo = std::min(lo, segment_origin_distance(points_[s], points_[s + 1]));
        hi = std::max(hi, std::max(std::abs(points_[s]), std::abs(points_[s + 1])));
    }
    return {lo, hi};
}

namespace {

void append_radial(std::vector<Complex>& verts, double r_from, double r_to, double theta,
                   int splits) {
    if (r_from == r_to) return;
    const int k = std::max(1, splits);
    for (int j = 1; j <= k; ++j) {
        const double r = r_from + (r_to - r_from) * j / k;
        verts.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
}

void append_arc(std::vector<Complex>& verts, double radius, double th_from, double th_to,
                double max_step) {
    const double sweep = th_to - th_from;
    if (sweep == 0.0) return;
    const int k = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / max_step)));
    for (int j = 1; j <= k; ++j) {
        const double th = th_from + sweep * j / k;
        verts.emplace_back(radius * std::cos(th), radius * std::sin(th));
    }
}

double wrap_angle(double a) {
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

double default_guard(Complex z0, Complex z, const PathOptions& opt) {
    if (opt.min_origin_distance > 0.0) return opt.min_origin_distance;
    return 0.5 * std::min(std::abs(z0), std::abs(z));
}

} // namespace

PathSpec log_polar_path(Complex z0, Complex z, const PathOptions& opt) {
    if (z == z0) return PathSpec(z0, {}, opt.nodes_per_segment, opt.rule);
    const double r0 = std::abs(z0), rz = std::abs(z);
    if (r0 == 0.0 || rz == 0.0)
        throw std::domain_error("log_polar_path: endpoint at the origin");
    const double th0 = std::arg(z0);
    const double dth = wrap_angle(std::arg(z) - th0);
    std::vector<Complex> verts;
    append_radial(verts, r0, rz, th0, opt.radial_splits);
    append_arc(verts, rz, th0, th0 + dth, opt.max_arc_step);
    if (verts.empty() || std::abs(verts.back() - z) > 1e-13 * std::max(1.0, rz))
        verts.push_back(z);
    else
        verts.back() = z; // land exactly on the target
    return PathSpec(z0, std::move(verts), opt.nodes_per_segment, opt.rule,
                    default_guard(z0, z, opt) * std::cos(0.5 * opt.max_arc_step));
}

PathSpec log_polar_path_arc_first(Complex z0, Complex z, const PathOptions& opt) {
    if (z == z0) return PathSpec(z0, {}, opt.nodes_per_segment, opt.rule);
    const double r0 = std::abs(z0), rz = std::abs(z);
    if (r0 == 0.0 || rz == 0.0)
        throw std::domain_error("log_polar_path: endpoint at the origin");
    const double th0 = std::arg(z0);
    const double dth = wrap_angle(std::arg(z) - th0);
    std::vector<Complex> verts;
    append_arc(verts, r0, th0, th0 + dth, opt.max_arc_step);
    append_radial(verts, r0, rz, th0 + dth, opt.radial_splits);
    if (verts.empty() || std::abs(verts.back() - z) > 1e-13 * std::max(1.0, rz))
        verts.push_back(z);
    else
        verts.back() = z;
    return PathSpec(z0, std::move(verts), opt.nodes_per_segment, opt.rule,
                    default_guard(z0, z, opt) * std::cos(0.5 * opt.max_arc_step));
}

PanelizedPath panelize(const PathSpec& path) {
    if (path.rule() != QuadRule::GaussLegendre)
        throw std::invalid_argument(
            "panelize: cumulative sweeps support only the gauss-legendre rule");
    const PanelRule& rule = PanelRule::get(path.nodes_per_segment());
    PanelizedPath out;
    out.boundaries = path.points();
    out.nodes_per_panel = rule.p;
    const size_t K = path.segment_count();
    out.nodes.reserve(K * rule.p);
    for (size_t s = 0; s < K; ++s) {
        const Complex mid = 0.5 * (out.boundaries[s] + out.boundaries[s + 1]);
        const Complex half = 0.5 * (out.boundaries[s + 1] - out.boundaries[s]);
        for (int k = 0; k < rule.p; ++k) out.nodes.push_back(mid + rule.nodes[k] * half);
    }
    return out;
}

} // namespace vekua
