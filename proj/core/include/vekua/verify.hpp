#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vekua/bvp.hpp"
#include "vekua/conjugate.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/generating_pair.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

using ComplexField = std::function<Complex(Complex)>;

/// Rectangular finite-difference lattice (endpoints included).
struct GridSpec {
    double x0, x1, y0, y1;
    int nx = 17, ny = 17;
    GridSpec halved() const { return {x0, x1, y0, y1, 2 * (nx - 1) + 1, 2 * (ny - 1) + 1}; }
    double hx() const { return (x1 - x0) / (nx - 1); }
    double hy() const { return (y1 - y0) / (ny - 1); }
};

struct ResidualReport {
    double h = 0.0;
    double max_residual = 0.0;
    double rms_residual = 0.0;
    double estimated_order = 0.0; // from this grid and its halved companion
    int skipped_points = 0;       // stencil points where evaluation failed
};

/// Residual of the main Vekua equation W_zbar = (f_zbar / f) conj(W) with
/// f = sqrt(eps), by central differences on the lattice and on its halving.
ResidualReport vekua_residual(const ComplexField& W, const RadialProfile& profile,
                              const GridSpec& grid);

/// Residual of div(eps grad u) = 0 (or div(grad v / eps) = 0 when reciprocal)
/// with a conservative flux stencil; eps is sampled exactly at half steps.
ResidualReport conductivity_residual(const std::function<double(Complex)>& u,
                                     const RadialProfile& profile, const GridSpec& grid,
                                     bool reciprocal = false);

/// Max over samples of |a_(m+1) - a_m| + |b_(m+1) + B_m| for the generating
/// sequence, all coefficients by central differences with step
/// fd_step_rel * |z|. Samples with a degenerate pair are skipped.
double successor_check(const GeneratingSequence& seq, int m, std::span<const Complex> samples,
                       double fd_step_rel = 1e-5);

/// Deviations |Z^(n)(a, z0; z)/(a (z-z0)^n) - 1| for targets on shrinking
/// circles around z0 (max over `directions` angles per radius).
std::vector<double> asymptotic_check(const GeneratingSequence& seq, Complex z0, int n,
                                     std::span<const double> radii, Coeff coeff = Coeff::One,
                                     int directions = 4, const PathOptions& opt = {});

struct PathIndependenceResult {
    double disagreement = 0.0;
    double combined_estimate = 0.0; // sum of the two refinement estimates
};
PathIndependenceResult path_independence_check(const GeneratingSequence& seq, Complex z0, int n,
                                               Coeff coeff, const PathSpec& path_a,
                                               const PathSpec& path_b);

struct ConvergenceStudy {
    std::vector<int> n_values;
    std::vector<double> errors;
    double fitted_rate = 0.0; // slope of log(error) vs log(n) on the tail half
    bool truncated = false;   // solver failed at some n
};

/// Solves the problem for each n in `ns` (boundary re-sampled with the
/// default over-collocation) and measures the max interior error against the
/// exact solution at the evaluation points.
ConvergenceStudy convergence_study(BvpProblem problem,
                                   const std::function<double(Complex)>& boundary_data,
                                   const std::function<double(Complex)>& exact,
                                   std::span<const int> ns, std::span<const Complex> eval_points);

/// Classical collocation with harmonic polynomials {1, Re (z-z0)^n, Im (z-z0)^n};
/// the cross-oracle for constant-permittivity cases.
std::function<double(Complex)> harmonic_collocation(std::span<const BoundarySample> boundary,
                                                    Complex z0, int n_max);

/// One entry of the verification battery run by the command-line tool.
struct CheckResult {
    std::string name;
    std::string parameters;
    double metric = 0.0;
    double threshold = 0.0;
    bool pass = false;
};
std::vector<CheckResult> run_default_verification();

} // namespace vekua
