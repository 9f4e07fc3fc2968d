#include "vekua/generating_pair.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vekua {

GeneratingSequence::GeneratingSequence(RealFn U, RealFn V, ComplexFn phi, ComplexFn phi_z)
    : U_(std::move(U)), V_(std::move(V)), phi_(std::move(phi)), phi_z_(std::move(phi_z)) {}

PairValue GeneratingSequence::pair(int m, Complex z) const {
    const Complex w = phi_(z);
    const double u = U_(w.real());
    const double v = V_(w.imag());
    if (u == 0.0 || v == 0.0)
        throw std::domain_error("GeneratingSequence: U or V vanishes at a query point");
    const Complex uv{u * v, 0.0};
    const Complex dzm = pow_int(phi_z_(z), m);
    Complex F = dzm * uv;
    Complex G = dzm * Complex{0.0, 1.0} / uv;
    if (m % 2 != 0) {
        const double u2 = u * u;
        F /= u2;
        G *= u2;
    }
    return {F, G};
}

AdjointValue GeneratingSequence::adjoint(int m, Complex z) const {
    const PairValue p = pair(m, z);
    const Complex den = p.F * std::conj(p.G) - std::conj(p.F) * p.G; // = -2i Im(conj(F)G)
    if (std::imag(std::conj(p.F) * p.G) <= 0.0)
        throw std::domain_error("GeneratingSequence: pair condition Im(conj(F)G) > 0 violated");
    return {-2.0 * std::conj(p.F) / den, 2.0 * std::conj(p.G) / den};
}

void GeneratingSequence::validate_on(const Domain& domain, int samples_per_axis) const {
    if (samples_per_axis % 2 == 0) ++samples_per_axis; // keep the centroid on the lattice
    const Complex c = domain.centroid();
    const double d = domain.diameter();
    int checked = 0;
    double dz_min = std::numeric_limits<double>::infinity(), dz_max = 0.0;
    for (int i = 0; i < samples_per_axis; ++i) {
        for (int j = 0; j < samples_per_axis; ++j) {
            const Complex z = c + Complex{(i / (samples_per_axis - 1.0) - 0.5) * d,
                                          (j / (samples_per_axis - 1.0) - 0.5) * d};
            if (!domain.contains(z)) continue;
            ++checked;
            const Complex dz = phi_z_(z);
            if (!is_finite(dz) || std::abs(dz) == 0.0)
                throw std::domain_error(
                    "GeneratingSequence: Phi_z vanishes or is unbounded on the domain");
            dz_min = std::min(dz_min, std::abs(dz));
            dz_max = std::max(dz_max, std::abs(dz));
            const PairValue p = pair(0, z);
            if (!(std::imag(std::conj(p.F) * p.G) > 0.0))
                throw std::domain_error("GeneratingSequence: Im(conj(F)G) > 0 fails on the domain");
        }
    }
    if (checked == 0)
        throw std::invalid_argument("GeneratingSequence: no sample points fell inside the domain");
    if (dz_min < 1e-8 * dz_max)
        throw std::domain_error("GeneratingSequence: Phi_z nearly vanishes on the domain");
}

GeneratingSequence make_generating_sequence(GeneratingSequence::RealFn U,
                                            GeneratingSequence::RealFn V,
                                            GeneratingSequence::ComplexFn phi,
                                            GeneratingSequence::ComplexFn phi_z,
                                            const Domain* check_domain) {
    GeneratingSequence seq(std::move(U), std::move(V), std::move(phi), std::move(phi_z));
    if (check_domain) seq.validate_on(*check_domain);
    return seq;
}

GeneratingSequence transverse_sequence(const RadialProfile& profile) {
    auto U = [profile](double u) { return std::sqrt(profile(std::exp(u))); };
    auto V = [](double) { return 1.0; };
    auto phi = [](Complex z) { return std::log(z); };
    auto phi_z = [](Complex z) { return Complex{1.0, 0.0} / z; };
    return GeneratingSequence(std::move(U), std::move(V), std::move(phi), std::move(phi_z));
}

Complex zero_order_power(int m, Coeff coeff, Complex z0, Complex z, const RadialProfile& profile) {
    const double r = std::abs(z), r0 = std::abs(z0);
    if (r == 0.0) throw std::domain_error("zero_order_power: z = 0");
    if (r0 == 0.0) throw std::domain_error("zero_order_power: z0 = 0");
    const double th0 = std::arg(z0);
    const double e = profile(r), e0 = profile(r0);
    const double ratio = std::sqrt(e0 / e);      // sqrt(eps(r0)/eps(r))
    const double inv_ratio = std::sqrt(e / e0);  // sqrt(eps(r)/eps(r0))
    const double cs = std::cos(m * th0), sn = std::sin(m * th0);
    const Complex factor = std::pow(r0, m) * pow_int(z, -m); // (r0/z)^m
    Complex trig;
    if (m % 2 != 0) {
        trig = (coeff == Coeff::One) ? Complex{cs * ratio, sn * inv_ratio}
                                     : Complex{-sn * ratio, cs * inv_ratio};
    } else {
        trig = (coeff == Coeff::One) ? Complex{cs * inv_ratio, sn * ratio}
                                     : Complex{-sn * inv_ratio, cs * ratio};
    }
    return factor * trig;
}

Complex zero_order_power(const GeneratingSequence& seq, int m, Complex a, Complex z0, Complex z) {
    const PairValue p0 = seq.pair(m, z0);
    const double det = std::imag(std::conj(p0.F) * p0.G);
    if (!(det > 0.0))
        throw std::domain_error("zero_order_power: pair condition fails at the center");
    // solve lambda F(z0) + mu G(z0) = a for real lambda, mu
    const double lambda =
        (a.real() * p0.G.imag() - a.imag() * p0.G.real()) / det;
    const double mu = (a.imag() * p0.F.real() - a.real() * p0.F.imag()) / det;
    const PairValue p = seq.pair(m, z);
    return lambda * p.F + mu * p.G;
}

CharacteristicCoefficients characteristic_coefficients(const GeneratingSequence& seq, int m,
                                                       Complex z, double fd_step) {
    const double h = fd_step;
    auto dz_dzbar = [&](auto eval) -> std::pair<Complex, Complex> {
        const Complex fx = (eval(z + Complex{h, 0}) - eval(z - Complex{h, 0})) / (2.0 * h);
        const Complex fy = (eval(z + Complex{0, h}) - eval(z - Complex{0, h})) / (2.0 * h);
        return {0.5 * (fx - Complex{0, 1} * fy), 0.5 * (fx + Complex{0, 1} * fy)};
    };
    const auto [Fz, Fzb] = dz_dzbar([&](Complex w) { return seq.pair(m, w).F; });
    const auto [Gz, Gzb] = dz_dzbar([&](Complex w) { return seq.pair(m, w).G; });
    const PairValue p = seq.pair(m, z);
    const Complex den = p.F * std::conj(p.G) - std::conj(p.F) * p.G;
    if (std::abs(den) == 0.0)
        throw std::domain_error("characteristic_coefficients: degenerate pair at sample");
    CharacteristicCoefficients cc;
    cc.a = -(std::conj(p.F) * Gzb - Fzb * std::conj(p.G)) / den;
    cc.b = (p.F * Gzb - Fzb * p.G) / den;
    cc.A = -(std::conj(p.F) * Gz - Fz * std::conj(p.G)) / den;
    cc.B = (p.F * Gz - Fz * p.G) / den;
    return cc;
}

} // namespace vekua
