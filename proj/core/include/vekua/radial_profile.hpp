#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vekua/types.hpp"

namespace vekua {

/// Permittivity as an evaluable positive function of one real variable.
/// Closed-form presets or a tabulated profile with monotone piecewise-cubic
/// interpolation. Evaluation outside the declared validity range throws.
class RadialProfile {
  public:
    enum class Kind { Constant, Power, Exponential, Reciprocal, Table };

    static RadialProfile constant(double c, double r_min = 0.0, double r_max = 1e9);
    static RadialProfile power(double c, double alpha, double r_min, double r_max);
    static RadialProfile exponential(double c, double alpha, double r_min = 0.0,
                                     double r_max = 100.0);
    static RadialProfile reciprocal(double c, double r_min, double r_max);
    static RadialProfile table(std::vector<std::pair<double, double>> points);

    double operator()(double r) const;
    double sqrt_at(double r) const; // f = sqrt(eps(r))

    Kind kind() const { return kind_; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double c() const { return c_; }
    double alpha() const { return alpha_; }
    const std::vector<std::pair<double, double>>& points() const { return pts_; }

    std::string describe() const;

  private:
    RadialProfile() = default;
    void build_slopes();

    Kind kind_ = Kind::Constant;
    double c_ = 1.0, alpha_ = 0.0;
    double r_min_ = 0.0, r_max_ = 0.0;
    std::vector<std::pair<double, double>> pts_;
    std::vector<double> slopes_; // Fritsch-Carlson limited tangents
};

} // namespace vekua
