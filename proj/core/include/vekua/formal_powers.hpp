#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "vekua/domain.hpp"
#include "vekua/generating_pair.hpp"
#include "vekua/path.hpp"
#include "vekua/types.hpp"

namespace vekua {

/// (F_m, G_m)-integral of w along the path:
///   F_m(end) Re( integral of G_m* w ) + G_m(end) Re( integral of F_m* w ).
Complex fg_integral(const GeneratingSequence& seq, int m, const std::function<Complex(Complex)>& w,
                    const PathSpec& path);

/// Formal powers of exponents 0..n_max for both coefficient members, computed
/// along one path by descending the generating sequence: the exponent-0 power
/// of level m = n seeds the chain; each sweep applies one cumulative
/// (F_m, G_m)-integration over all path nodes, so the whole build costs
/// O(n_max^2 P) evaluations for P nodes.
class FormalPowerPath {
  public:
    FormalPowerPath(const GeneratingSequence& seq, Complex z0, int n_max, PathSpec path);

    Complex at_end(int n, Coeff c) const;
    Complex at_boundary(int n, Coeff c, size_t j) const;
    const PathSpec& path() const { return path_; }
    const std::vector<Complex>& boundary_points() const { return panels_.boundaries; }
    Complex z0() const { return z0_; }
    int n_max() const { return n_max_; }

  private:
    Complex z0_;
    int n_max_;
    PathSpec path_;
    PanelizedPath panels_;
    // values[n][coeff] at panel boundaries (targets live there)
    std::vector<std::array<std::vector<Complex>, 2>> at_boundaries_;
};

struct PowerTableOptions {
    PathOptions path;
    bool with_refinement = true; // rebuild at doubled nodes to estimate quadrature error
    int n_cap = 30;
};

/// Formal powers for a family of targets inside an origin-excluded domain,
/// one log-polar path per target.
class FormalPowerTable {
  public:
    static FormalPowerTable build(const GeneratingSequence& seq, const RadialProfile& profile,
                                  Complex z0, int n_max, std::span<const Complex> targets,
                                  const Domain& domain, const PowerTableOptions& opt = {});

    size_t target_count() const { return targets_.size(); }
    Complex target(size_t i) const { return targets_[i]; }
    Complex value(int n, Coeff c, size_t target) const;
    double refinement_estimate(int n, size_t target) const;
    const FormalPowerPath& path_build(size_t target) const { return builds_[target]; }
    Complex z0() const { return z0_; }
    int n_max() const { return n_max_; }

  private:
    Complex z0_{};
    int n_max_ = 0;
    std::vector<Complex> targets_;
    std::vector<FormalPowerPath> builds_;
    std::vector<std::vector<double>> estimates_; // [n][target]
};

/// Single-point formal power along the default log-polar path.
Complex formal_power(const GeneratingSequence& seq, Complex z0, int n, Coeff c, Complex z,
                     const PathOptions& opt = {});

struct PowerWithEstimate {
    Complex value;
    double refinement_estimate;
};
PowerWithEstimate formal_power_along(const GeneratingSequence& seq, Complex z0, int n, Coeff c,
                                     const PathSpec& path);

/// Transform a solution W of the main Vekua equation into the corresponding
/// p-analytic value: Re(W)/f + i f Im(W), with f = sqrt(eps) at the point.
inline Complex star_power_from_vekua(Complex Z, double f) {
    if (!(f > 0.0)) throw std::domain_error("star_power_from_vekua: f must be positive");
    return {Z.real() / f, f * Z.imag()};
}

} // namespace vekua
