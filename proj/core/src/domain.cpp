#include "vekua/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vekua {

Domain Domain::rectangle(double x0, double x1, double y0, double y1) {
    if (!(x0 < x1) || !(y0 < y1))
        throw std::invalid_argument("Domain::rectangle: degenerate extents");
    Domain d;
    d.kind_ = Kind::Rectangle;
    d.x0_ = x0;
    d.x1_ = x1;
    d.y0_ = y0;
    d.y1_ = y1;
    return d;
}

Domain Domain::disk(Complex center, double radius) {
    if (!(radius > 0)) throw std::invalid_argument("Domain::disk: radius must be positive");
    Domain d;
    d.kind_ = Kind::Disk;
    d.center_ = center;
    d.radius_ = radius;
    return d;
}

Domain Domain::polygon(std::vector<Complex> vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("Domain::polygon: need >= 3 vertices");
    double area2 = 0.0;
    for (size_t i = 0; i < vertices.size(); ++i) {
        const Complex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
        area2 += a.real() * b.imag() - b.real() * a.imag();
    }
    if (area2 == 0.0) throw std::invalid_argument("Domain::polygon: zero area");
    if (area2 < 0.0) std::reverse(vertices.begin(), vertices.end()); // enforce ccw
    Domain d;
    d.kind_ = Kind::Polygon;
    d.verts_ = std::move(vertices);
    return d;
}

bool Domain::contains(Complex z) const {
    constexpr double tol = 1e-12;
    switch (kind_) {
    case Kind::Rectangle:
        return z.real() >= x0_ - tol && z.real() <= x1_ + tol && z.imag() >= y0_ - tol &&
               z.imag() <= y1_ + tol;
    case Kind::Disk:
        return std::abs(z - center_) <= radius_ + tol;
    case Kind::Polygon: {
        bool inside = false;
        const size_t n = verts_.size();
        for (size_t i = 0, j = n - 1; i < n; j = i++) {
            const Complex a = verts_[i], b = verts_[j];
            // on-edge test
            const Complex e = b - a, w = z - a;
            const double cross = e.real() * w.imag() - e.imag() * w.real();
            const double dot = e.real() * w.real() + e.imag() * w.imag();
            const double len2 = std::norm(e);
            if (std::abs(cross) <= tol * std::sqrt(len2) && dot >= -tol && dot <= len2 + tol)
                return true;
            if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
                const double xint =
                    a.real() + (z.imag() - a.imag()) / (b.imag() - a.imag()) * (b.real() - a.real());
                if (z.real() < xint) inside = !inside;
            }
        }
        return inside;
    }
    }
    return false;
}

Complex Domain::centroid() const {
    switch (kind_) {
    case Kind::Rectangle:
        return {0.5 * (x0_ + x1_), 0.5 * (y0_ + y1_)};
    case Kind::Disk:
        return center_;
    case Kind::Polygon: {
        double a2 = 0.0, cx = 0.0, cy = 0.0;
        const size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            const Complex p = verts_[i], q = verts_[(i + 1) % n];
            const double cr = p.real() * q.imag() - q.real() * p.imag();
            a2 += cr;
            cx += (p.real() + q.real()) * cr;
            cy += (p.imag() + q.imag()) * cr;
        }
        return {cx / (3.0 * a2), cy / (3.0 * a2)};
    }
    }
    return {};
}

double Domain::diameter() const {
    switch (kind_) {
    case Kind::Rectangle:
        return std::hypot(x1_ - x0_, y1_ - y0_);
    case Kind::Disk:
        return 2.0 * radius_;
    case Kind::Polygon: {
        double d = 0.0;
        for (size_t i = 0; i < verts_.size(); ++i)
            for (size_t j = i + 1; j < verts_.size(); ++j)
                d = std::max(d, std::abs(verts_[i] - verts_[j]));
        return d;
    }
    }
    return 0.0;
}

double Domain::min_x() const {
    switch (kind_) {
    case Kind::Rectangle:
        return x0_;
    case Kind::Disk:
        return center_.real() - radius_;
    case Kind::Polygon: {
        double m = verts_[0].real();
        for (const auto& v : verts_) m = std::min(m, v.real());
        return m;
    }
    }
    return 0.0;
}

namespace {
double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex e = b - a;
    const double len2 = std::norm(e);
    if (len2 == 0.0) return std::abs(p - a);
    const Complex w = p - a;
    double t = (w.real() * e.real() + w.imag() * e.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * e));
}
double segment_origin_distance(Complex a, Complex b) {
    return point_segment_distance({0, 0}, a, b);
}
} // namespace

std::pair<double, double> Domain::radial_range() const {
    switch (kind_) {
    case Kind::Rectangle: {
        const Complex corners[4] = {{x0_, y0_}, {x1_, y0_}, {x1_, y1_}, {x0_, y1_}};
        double lo = 0.0, hi = 0.0;
        if (contains({0, 0})) {
            lo = 0.0;
        } else {
            lo = segment_origin_distance(corners[0], corners[1]);
            for (int i = 1; i < 4; ++i)
                lo = std::min(lo, segment_origin_distance(corners[i], corners[(i + 1) % 4]));
        }
        for (const auto& c : corners) hi = std::max(hi, std::abs(c));
        return {lo, hi};
    }
    case Kind::Disk: {
        const double d = std::abs(center_);
        return {std::max(0.0, d - radius_), d + radius_};
    }
    case Kind::Polygon: {
        double lo, hi = 0.0;
        if (contains({0, 0})) {
            lo = 0.0;
        } else {
            lo = std::abs(verts_[0]);
            const size_t n = verts_.size();
            for (size_t i = 0; i < n; ++i)
                lo = std::min(lo, segment_origin_distance(verts_[i], verts_[(i + 1) % n]));
        }
        for (const auto& v : verts_) hi = std::max(hi, std::abs(v));
        return {lo, hi};
    }
    }
    return {0.0, 0.0};
}

double Domain::boundary_length() const {
    switch (kind_) {
    case Kind::Rectangle:
        return 2.0 * ((x1_ - x0_) + (y1_ - y0_));
    case Kind::Disk:
        return 2.0 * M_PI * radius_;
    case Kind::Polygon: {
        double L = 0.0;
        const size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) L += std::abs(verts_[(i + 1) % n] - verts_[i]);
        return L;
    }
    }
    return 0.0;
}

double Domain::boundary_distance(Complex z) const {
    switch (kind_) {
    case Kind::Rectangle: {
        const Complex corners[4] = {{x0_, y0_}, {x1_, y0_}, {x1_, y1_}, {x0_, y1_}};
        double d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 4; ++i)
            d = std::min(d, point_segment_distance(z, corners[i], corners[(i + 1) % 4]));
        return d;
    }
    case Kind::Disk:
        return std::abs(std::abs(z - center_) - radius_);
    case Kind::Polygon: {
        double d = std::numeric_limits<double>::infinity();
        const size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i)
            d = std::min(d, point_segment_distance(z, verts_[i], verts_[(i + 1) % n]));
        return d;
    }
    }
    return 0.0;
}

std::array<double, 4> Domain::bounding_box() const {
    switch (kind_) {
    case Kind::Rectangle:
        return {x0_, x1_, y0_, y1_};
    case Kind::Disk:
        return {center_.real() - radius_, center_.real() + radius_, center_.imag() - radius_,
                center_.imag() + radius_};
    case Kind::Polygon: {
        double lx = verts_[0].real(), hx = lx, ly = verts_[0].imag(), hy = ly;
        for (const auto& v : verts_) {
            lx = std::min(lx, v.real());
            hx = std::max(hx, v.real());
            ly = std::min(ly, v.imag());
            hy = std::max(hy, v.imag());
        }
        return {lx, hx, ly, hy};
    }
    }
    return {0, 0, 0, 0};
}

std::vector<Complex> Domain::boundary_points(int count) const {
    if (count < 1) throw std::invalid_argument("boundary_points: count must be positive");
    std::vector<Complex> pts;
    pts.reserve(count);
    if (kind_ == Kind::Disk) {
        for (int k = 0; k < count; ++k) {
            const double th = 2.0 * M_PI * k / count;
            pts.push_back(center_ + radius_ * Complex{std::cos(th), std::sin(th)});
        }
        return pts;
    }
    // polyline walk for rectangle and polygon
    std::vector<Complex> verts;
    if (kind_ == Kind::Rectangle) {
        verts = {{x0_, y0_}, {x1_, y0_}, {x1_, y1_}, {x0_, y1_}};
    } else {
        verts = verts_;
    }
    const size_t n = verts.size();
    const double L = boundary_length();
    const double step = L / count;
    size_t edge = 0;
    double edge_len = std::abs(verts[1 % n] - verts[0]);
    double edge_start = 0.0;
    for (int k = 0; k < count; ++k) {
        const double s = k * step;
        while (s > edge_start + edge_len + 1e-15) {
            edge_start += edge_len;
            ++edge;
            edge_len = std::abs(verts[(edge + 1) % n] - verts[edge % n]);
        }
        const Complex a = verts[edge % n], b = verts[(edge + 1) % n];
        const double t = edge_len > 0 ? (s - edge_start) / edge_len : 0.0;
        pts.push_back(a + t * (b - a));
    }
    return pts;
}

} // namespace vekua
