#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vekua/quadrature.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

/// The two interleaved families of recursive integrals that generate the
/// meridional formal powers. Level 0 is identically 1; each next level
/// integrates the previous one from x0 against 1/(t eps(t)) or t eps(t),
/// alternating between the families, scaled by the level index.
///
/// Values are computed on quadrature panels between consecutive grid points
/// and are exact for the per-panel polynomial model, so point queries carry
/// no separate interpolation-scheme error. The grid must contain x0; queries
/// below x0 use the signed integral.
class XSequence {
  public:
    XSequence(const RadialProfile& profile, double x0, std::span<const double> grid, int n_max,
              int nodes_per_panel = 16);

    double x0() const { return x0_; }
    int n_max() const { return n_max_; }
    const RadialProfile& profile() const { return profile_; }
    const std::vector<double>& grid() const { return boundaries_; }

    /// X^(n)(x0, x) and its companion, interpolated within the panel holding x.
    double X(int n, double x) const;
    double Xt(int n, double x) const;

    double X_at_grid(int n, size_t j) const { return X_b_[n][j]; }
    double Xt_at_grid(int n, size_t j) const { return Xt_b_[n][j]; }

    /// Convenience grid covering [lo, hi] with roughly `count` points and x0
    /// inserted as a grid point.
    static std::vector<double> make_grid(double lo, double hi, double x0, int count = 512);

  private:
    double eval(const std::vector<std::vector<double>>& at_b,
                const std::vector<std::vector<double>>& at_n, int n, double x) const;

    RadialProfile profile_;
    double x0_ = 0.0;
    int n_max_ = 0;
    const PanelRule* rule_ = nullptr;
    std::vector<double> boundaries_;
    std::vector<double> nodes_; // panel-major mapped rule nodes
    // per level n: values at boundaries / at nodes
    std::vector<std::vector<double>> X_b_, X_n_, Xt_b_, Xt_n_;
};

/// Binomial-sum formal power for the meridional reduction, centered at
/// z0 = x0 + i y0 with complex coefficient a. Odd orders pair the X family
/// with Re a, even orders pair the companion family with Re a.
Complex eval_meridional_power(const XSequence& xs, int n, Complex a, double y0, Complex z);

/// Bundles the 1-D sequence with a center so the power family is a function
/// of (n, a, z) only.
struct MeridionalPowers {
    std::shared_ptr<const XSequence> xs;
    Complex z0;

    MeridionalPowers(std::shared_ptr<const XSequence> seq, Complex center);
    Complex operator()(int n, Complex a, Complex z) const {
        return eval_meridional_power(*xs, n, a, z0.imag(), z);
    }
};

/// Field components encoded by a meridional solution value w = u + iv at
/// abscissa x: the axial component is u, the radial one v/(x eps(x)).
struct MeridionalField {
    double E_r;
    double E_3;
};
MeridionalField field_from_meridional(Complex w, const RadialProfile& profile, double x);

} // namespace vekua
