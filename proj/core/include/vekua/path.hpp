#pragma once

#include <span>
#include <vector>

#include "vekua/quadrature.hpp"
#include "vekua/types.hpp"

namespace vekua {

/// Discretized rectifiable curve: a polyline from start through vertices,
/// carrying the quadrature prescription for integrals along it. Construction
/// rejects any segment passing closer to the origin than min_origin_distance
/// (the integrands of the transverse recursion are singular there).
class PathSpec {
  public:
    PathSpec(Complex start, std::vector<Complex> vertices, int nodes_per_segment = 16,
             QuadRule rule = QuadRule::GaussLegendre, double min_origin_distance = 0.0);

    Complex start() const { return points_.front(); }
    Complex end() const { return points_.back(); }
    /// Full polyline including the start point; size = segment count + 1.
    const std::vector<Complex>& points() const { return points_; }
    size_t segment_count() const { return points_.size() - 1; }
    int nodes_per_segment() const { return nodes_per_segment_; }
    QuadRule rule() const { return rule_; }
    double min_origin_distance() const { return min_origin_distance_; }

    PathSpec refined(int factor = 2) const;

    /// Min over segments of the distance from the origin to the segment.
    double origin_distance() const;
    /// Range of |z| over the polyline (for profile validity checks).
    std::pair<double, double> radial_range() const;

  private:
    std::vector<Complex> points_;
    int nodes_per_segment_;
    QuadRule rule_;
    double min_origin_distance_;
};

struct PathOptions {
    int nodes_per_segment = 16;
    QuadRule rule = QuadRule::GaussLegendre;
    double max_arc_step = M_PI / 16.0;  // max angle per chord of the arc leg
    int radial_splits = 3;              // panels on the radial leg
    double min_origin_distance = 0.0;   // 0: derived from the endpoint radii
};

/// Log-polar polyline from z0 to z: a radial leg along arg(z0) to |z|, then
/// the circular arc at radius |z| to z, discretized as chords. Guaranteed to
/// avoid the origin for endpoints away from it; the argument sweep takes the
/// short way around, so any two such paths between the same endpoints are
/// homotopic in the punctured plane.
PathSpec log_polar_path(Complex z0, Complex z, const PathOptions& opt = {});

/// Companion family for path-independence checks: arc first (at radius |z0|),
/// then the radial leg to z.
PathSpec log_polar_path_arc_first(Complex z0, Complex z, const PathOptions& opt = {});

/// Path panelization for cumulative recursion sweeps: every polyline segment
/// becomes one quadrature panel with the rule's nodes mapped onto it.
struct PanelizedPath {
    std::vector<Complex> boundaries; // = path.points()
    std::vector<Complex> nodes;      // segment-major mapped Gauss-Legendre nodes
    int nodes_per_panel = 0;
};
PanelizedPath panelize(const PathSpec& path);

} // namespace vekua
