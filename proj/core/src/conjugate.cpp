#include "vekua/conjugate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vekua/quadrature.hpp"

namespace vekua {

namespace {

// integral of eps * (-u_y dx + u_x dy) over the segment a -> b
double leg_integral(const GradientField& grad_u, const RadialProfile& profile, Complex a,
                    Complex b, int p) {
    const PanelRule& rule = PanelRule::get(p);
    const Complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int k = 0; k < rule.p; ++k) {
        const Complex z = mid + rule.nodes[k] * half;
        const Complex g = grad_u(z);
        const double eps = profile(std::abs(z));
        acc += rule.weights[k] * eps * (-g.imag() * half.real() + g.real() * half.imag());
    }
    return acc;
}

std::vector<Complex> conjugate_route(const Domain& domain, Complex z0, Complex z,
                                     bool vertical_first) {
    if (domain.kind() == Domain::Kind::Polygon) {
        if (vertical_first || z == z0) return {z0, z};
        // alternate homotopic route for the disagreement probe
        const Complex chord = z - z0;
        const Complex nudge = Complex{0, 1} * chord * 0.1;
        return {z0, z0 + 0.5 * chord + nudge, z};
    }
    const Complex corner = vertical_first ? Complex{z0.real(), z.imag()}
                                          : Complex{z.real(), z0.imag()};
    return {z0, corner, z};
}

} // namespace

ScalarField reconstruct_conjugate_grad(GradientField grad_u, const RadialProfile& profile,
                                  const Domain& domain, Complex z0,
                                  const ConjugateOptions& opt) {
    if (!domain.contains(z0))
        throw std::domain_error("reconstruct_conjugate: z0 outside the domain");
    const int p = opt.nodes_per_segment;
    const double c = opt.c;
    return [grad_u, profile, domain, z0, c, p](Complex z) {
        const auto route = conjugate_route(domain, z0, z, /*vertical_first=*/true);
        double v = c;
        for (size_t s = 0; s + 1 < route.size(); ++s)
            v += leg_integral(grad_u, profile, route[s], route[s + 1], p);
        return v;
    };
}

ScalarField reconstruct_conjugate(ScalarField u, const RadialProfile& profile,
                                  const Domain& domain, Complex z0,
                                  const ConjugateOptions& opt) {
    double h = opt.fd_step;
    if (h <= 0.0) h = 1e-5 * domain.diameter();
    return reconstruct_conjugate_grad(fd_gradient(std::move(u), h), profile, domain, z0, opt);
}

double conjugate_path_disagreement(GradientField grad_u, const RadialProfile& profile,
                                   const Domain& domain, Complex z0, Complex z,
                                   const ConjugateOptions& opt) {
    double va = 0.0, vb = 0.0;
    for (bool vertical_first : {true, false}) {
        const auto route = conjugate_route(domain, z0, z, vertical_first);
        double v = 0.0;
        for (size_t s = 0; s + 1 < route.size(); ++s)
            v += leg_integral(grad_u, profile, route[s], route[s + 1], opt.nodes_per_segment);
        (vertical_first ? va : vb) = v;
    }
    return std::abs(va - vb);
}

GradientField fd_gradient(ScalarField u, double step) {
    if (!(step > 0)) throw std::invalid_argument("fd_gradient: step must be positive");
    return [u = std::move(u), step](Complex z) {
        const double ux = (u(z + Complex{step, 0}) - u(z - Complex{step, 0})) / (2.0 * step);
        const double uy = (u(z + Complex{0, step}) - u(z - Complex{0, step})) / (2.0 * step);
        return Complex{ux, uy};
    };
}

} // namespace vekua
