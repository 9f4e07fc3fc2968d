#include "vekua/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vekua {

RadialProfile RadialProfile::constant(double c, double r_min, double r_max) {
    if (!(c > 0)) throw std::invalid_argument("RadialProfile: constant must be positive");
    RadialProfile p;
    p.kind_ = Kind::Constant;
    p.c_ = c;
    p.r_min_ = r_min;
    p.r_max_ = r_max;
    return p;
}

RadialProfile RadialProfile::power(double c, double alpha, double r_min, double r_max) {
    if (!(c > 0)) throw std::invalid_argument("RadialProfile: scale must be positive");
    if (!(r_min > 0)) throw std::invalid_argument("RadialProfile: power law needs r_min > 0");
    RadialProfile p;
    p.kind_ = Kind::Power;
    p.c_ = c;
    p.alpha_ = alpha;
    p.r_min_ = r_min;
    p.r_max_ = r_max;
    return p;
}

RadialProfile RadialProfile::exponential(double c, double alpha, double r_min, double r_max) {
    if (!(c > 0)) throw std::invalid_argument("RadialProfile: scale must be positive");
    RadialProfile p;
    p.kind_ = Kind::Exponential;
    p.c_ = c;
    p.alpha_ = alpha;
    p.r_min_ = r_min;
    p.r_max_ = r_max;
    return p;
}

RadialProfile RadialProfile::reciprocal(double c, double r_min, double r_max) {
    if (!(c > 0)) throw std::invalid_argument("RadialProfile: scale must be positive");
    if (!(r_min > 0)) throw std::invalid_argument("RadialProfile: reciprocal needs r_min > 0");
    RadialProfile p;
    p.kind_ = Kind::Reciprocal;
    p.c_ = c;
    p.r_min_ = r_min;
    p.r_max_ = r_max;
    return p;
}

RadialProfile RadialProfile::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("RadialProfile: table needs >= 2 points");
    for (size_t i = 0; i + 1 < points.size(); ++i)
        if (!(points[i].first < points[i + 1].first))
            throw std::invalid_argument("RadialProfile: table abscissae must be strictly increasing");
    for (const auto& [r, e] : points) {
        if (!(r > 0)) throw std::invalid_argument("RadialProfile: table abscissae must be positive");
        if (!(e > 0)) throw std::invalid_argument("RadialProfile: table values must be positive");
    }
    RadialProfile p;
    p.kind_ = Kind::Table;
    p.r_min_ = points.front().first;
    p.r_max_ = points.back().first;
    p.pts_ = std::move(points);
    p.build_slopes();
    return p;
}

// Fritsch-Carlson limited tangents: shape preserving, so positive data stays
// positive between the nodes.
void RadialProfile::build_slopes() {
    const size_t n = pts_.size();
    std::vector<double> d(n - 1), h(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = pts_[i + 1].first - pts_[i].first;
        d[i] = (pts_[i + 1].second - pts_[i].second) / h[i];
    }
    slopes_.assign(n, 0.0);
    slopes_[0] = d[0];
    slopes_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slopes_[i] = slopes_[i + 1] = 0.0;
            continue;
        }
        const double a = slopes_[i] / d[i], b = slopes_[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            slopes_[i] = tau * a * d[i];
            slopes_[i + 1] = tau * b * d[i];
        }
    }
}

double RadialProfile::operator()(double r) const {
    if (!(r >= r_min_ && r <= r_max_))
        throw std::domain_error("RadialProfile: r outside validity range [" +
                                std::to_string(r_min_) + ", " + std::to_string(r_max_) + "]");
    double v = 0.0;
    switch (kind_) {
    case Kind::Constant:
        v = c_;
        break;
    case Kind::Power:
        v = c_ * std::pow(r, alpha_);
        break;
    case Kind::Exponential:
        v = c_ * std::exp(alpha_ * r);
        break;
    case Kind::Reciprocal:
        v = c_ / r;
        break;
    case Kind::Table: {
        const auto it = std::upper_bound(pts_.begin(), pts_.end(), r,
                                         [](double x, const auto& p) { return x < p.first; });
        size_t i = it == pts_.begin() ? 0 : static_cast<size_t>(it - pts_.begin()) - 1;
        if (i + 1 >= pts_.size()) i = pts_.size() - 2;
        const double h = pts_[i + 1].first - pts_[i].first;
        const double t = (r - pts_[i].first) / h;
        const double y0 = pts_[i].second, y1 = pts_[i + 1].second;
        const double m0 = slopes_[i] * h, m1 = slopes_[i + 1] * h;
        const double t2 = t * t, t3 = t2 * t;
        v = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 +
            (t3 - t2) * m1;
        break;
    }
    }
    if (!(v > 0.0)) throw std::runtime_error("RadialProfile: non-positive value at r = " +
                                             std::to_string(r));
    return v;
}

double RadialProfile::sqrt_at(double r) const { return std::sqrt((*this)(r)); }

std::string RadialProfile::describe() const {
    switch (kind_) {
    case Kind::Constant:
        return "constant c=" + std::to_string(c_);
    case Kind::Power:
        return "power c=" + std::to_string(c_) + " alpha=" + std::to_string(alpha_);
    case Kind::Exponential:
        return "exponential c=" + std::to_string(c_) + " alpha=" + std::to_string(alpha_);
    case Kind::Reciprocal:
        return "reciprocal c=" + std::to_string(c_);
    case Kind::Table:
        return "table with " + std::to_string(pts_.size()) + " points";
    }
    return "";
}

} // namespace vekua
