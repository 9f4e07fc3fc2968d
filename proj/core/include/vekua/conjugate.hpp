#pragma once

#include <functional>

#include "vekua/domain.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

using ScalarField = std::function<double(Complex)>;
/// Gradient as a complex value u_x + i u_y.
using GradientField = std::function<Complex(Complex)>;

struct ConjugateOptions {
    double c = 0.0;            // v(z0)
    double fd_step = 0.0;      // 0: 1e-5 * domain diameter
    int nodes_per_segment = 24;
};

/// Conjugate metaharmonic partner of a solution u of div(eps grad u) = 0:
/// v(z) = integral along a curve from z0 of eps (-u_y dx + u_x dy) + c, which
/// makes u + iv solve the eps-analytic system u_x = v_y/eps, u_y = -v_x/eps.
/// Convex domains use the axis-parallel two-leg curve; polygons use the
/// straight segment from z0. The integral is path-independent exactly when u
/// solves the equation, which conjugate_path_disagreement probes.
ScalarField reconstruct_conjugate_grad(GradientField grad_u, const RadialProfile& profile,
                                  const Domain& domain, Complex z0,
                                  const ConjugateOptions& opt = {});

/// Black-box variant: the gradient is formed by central differences.
ScalarField reconstruct_conjugate(ScalarField u, const RadialProfile& profile,
                                  const Domain& domain, Complex z0,
                                  const ConjugateOptions& opt = {});

/// |v via vertical-then-horizontal  -  v via horizontal-then-vertical| at z;
/// large values signal that u is not (numerically) a solution.
double conjugate_path_disagreement(GradientField grad_u, const RadialProfile& profile,
                                   const Domain& domain, Complex z0, Complex z,
                                   const ConjugateOptions& opt = {});

GradientField fd_gradient(ScalarField u, double step);

/// Transverse field components: the field is the gradient of the potential.
struct TransverseField {
    double E_1;
    double E_2;
};
inline TransverseField field_from_transverse(Complex u_gradient) {
    return {u_gradient.real(), u_gradient.imag()};
}

} // namespace vekua
