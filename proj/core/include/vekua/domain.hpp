#pragma once

#include <array>
#include <vector>

#include "vekua/types.hpp"

namespace vekua {

/// Bounded simply connected evaluation region. Transverse-field use requires
/// the closure to exclude the origin; meridional use requires x > 0
/// throughout. Those constraints are checked by the consumers, not here.
class Domain {
  public:
    enum class Kind { Rectangle, Disk, Polygon };

    static Domain rectangle(double x0, double x1, double y0, double y1);
    static Domain disk(Complex center, double radius);
    static Domain polygon(std::vector<Complex> vertices);

    Kind kind() const { return kind_; }
    bool contains(Complex z) const;       // interior or boundary
    bool contains_origin() const { return contains(Complex{0, 0}); }
    Complex centroid() const;
    double diameter() const;
    double min_x() const;                 // inf of Re over the closure
    std::pair<double, double> radial_range() const; // [min |z|, max |z|] over the closure

    /// count points on the boundary, uniformly spaced by arc length,
    /// traversed counterclockwise from a fixed anchor.
    std::vector<Complex> boundary_points(int count) const;
    double boundary_length() const;
    /// distance from z to the boundary curve (0 for points on it)
    double boundary_distance(Complex z) const;
    /// axis-aligned bounding box {x0, x1, y0, y1}
    std::array<double, 4> bounding_box() const;

    // geometry access
    double x0() const { return x0_; }
    double x1() const { return x1_; }
    double y0() const { return y0_; }
    double y1() const { return y1_; }
    Complex center() const { return center_; }
    double radius() const { return radius_; }
    const std::vector<Complex>& vertices() const { return verts_; }

  private:
    Domain() = default;
    Kind kind_ = Kind::Rectangle;
    double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0; // rectangle
    Complex center_{};                         // disk
    double radius_ = 0;
    std::vector<Complex> verts_;               // polygon, counterclockwise
};

} // namespace vekua
