#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vekua/types.hpp"

namespace vekua {

class PathSpec;

enum class QuadRule { GaussLegendre, Simpson };

struct QuadratureResult {
    Complex value{};
    int node_count = 0;
    double refinement_estimate = 0.0; // |value - coarse value| from one node-doubling step
};

/// Gauss-Legendre nodes and weights on [-1,1], ascending nodes.
void gauss_legendre(int p, std::vector<double>& nodes, std::vector<double>& weights);

/// One quadrature panel on [-1,1] together with the machinery to integrate an
/// interpolant of nodal values from -1 up to any node (exact for polynomials
/// of degree < p). interp_nodes = {-1, nodes..., +1} carries barycentric
/// weights for stable in-panel evaluation of sampled functions.
struct PanelRule {
    int p = 0;
    std::vector<double> nodes;          // p Gauss-Legendre nodes
    std::vector<double> weights;        // p weights, sum = 2
    std::vector<double> partial;        // p*p row-major; partial[k*p+j]: integral -1..nodes[k] of Lagrange_j
    std::vector<double> interp_nodes;   // p+2 points
    std::vector<double> interp_weights; // barycentric weights for interp_nodes

    static const PanelRule& get(int p); // cached per p
};

/// Barycentric interpolation over rule.interp_nodes; values must follow the
/// same ordering ({left boundary, node values..., right boundary}).
double panel_interpolate(const PanelRule& rule, std::span<const double> values, double t);

/// Signed cumulative integrals over a panelized real interval. boundaries has
/// K+1 entries; node_values holds integrand samples at the K*p mapped
/// Gauss-Legendre nodes (panel-major). Returns the running integral from
/// boundaries[0] at every boundary and at every node.
struct CumulativeReal {
    std::vector<double> at_boundaries;
    std::vector<double> at_nodes;
};
CumulativeReal cumulative_panels(std::span<const double> boundaries,
                                 std::span<const double> node_values,
                                 const PanelRule& rule);

/// Same along a complex polyline: boundaries are the chord endpoints and the
/// differential picks up the chord direction (b-a)/2 per panel.
struct CumulativeComplex {
    std::vector<Complex> at_boundaries;
    std::vector<Complex> at_nodes;
};
CumulativeComplex cumulative_panels(std::span<const Complex> boundaries,
                                    std::span<const Complex> node_values,
                                    const PanelRule& rule);

/// Contour integral of w along the path by composite quadrature per segment.
/// The returned value uses one refinement step (doubled nodes); the estimate
/// is the difference between the two levels.
QuadratureResult line_integral(const std::function<Complex(Complex)>& w, const PathSpec& path);

/// Values of integral x0..grid[j] of g for all j. grid must be sorted with
/// grid[0] == x0; panels between consecutive grid points use the given rule.
std::vector<double> cumulative_integral(const std::function<double(double)>& g, double x0,
                                        std::span<const double> grid,
                                        QuadRule rule = QuadRule::GaussLegendre,
                                        int nodes_per_panel = 16);

} // namespace vekua
