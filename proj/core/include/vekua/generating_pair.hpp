#pragma once

#include <functional>

#include "vekua/domain.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

struct PairValue {
    Complex F, G;
};

struct AdjointValue {
    Complex F_star, G_star;
};

/// Generating sequence (F_m, G_m) built from a separable pair
/// F = U(Re Phi) V(Im Phi), G = i / (U V) and an analytic Phi whose
/// derivative is bounded and zero-free on the working domain:
///   even m:  F_m = Phi_z^m F,        G_m = Phi_z^m G
///   odd  m:  F_m = Phi_z^m F / U^2,  G_m = Phi_z^m U^2 G
/// Each level is a generating pair (Im(conj(F_m) G_m) > 0) and the chain is
/// a generating sequence, so levels support the recursive integration that
/// defines the formal powers.
class GeneratingSequence {
  public:
    using RealFn = std::function<double(double)>;
    using ComplexFn = std::function<Complex(Complex)>;

    GeneratingSequence(RealFn U, RealFn V, ComplexFn phi, ComplexFn phi_z);

    PairValue pair(int m, Complex z) const;
    /// Adjoint pair F* = -2 conj(F)/(F conj(G) - conj(F) G), G* = 2 conj(G)/(...).
    AdjointValue adjoint(int m, Complex z) const;

    /// Throws if Phi_z vanishes/blows up or the pair condition Im(conj(F)G) > 0
    /// fails at any of the sampled points.
    void validate_on(const Domain& domain, int samples_per_axis = 12) const;

  private:
    RealFn U_, V_;
    ComplexFn phi_, phi_z_;
};

GeneratingSequence make_generating_sequence(GeneratingSequence::RealFn U,
                                            GeneratingSequence::RealFn V,
                                            GeneratingSequence::ComplexFn phi,
                                            GeneratingSequence::ComplexFn phi_z,
                                            const Domain* check_domain = nullptr);

/// The sequence for the transverse reduction: U = sqrt(eps) as a function of
/// log r, V identically 1, Phi = log z. Levels come out as
///   even m:  F_m = sqrt(eps) z^-m,    G_m = i z^-m / sqrt(eps)
///   odd  m:  F_m = z^-m / sqrt(eps),  G_m = i sqrt(eps) z^-m.
GeneratingSequence transverse_sequence(const RadialProfile& profile);

/// Closed-form zero-order power of level m for the transverse sequence.
Complex zero_order_power(int m, Coeff coeff, Complex z0, Complex z, const RadialProfile& profile);

/// Generic zero-order power: the real-linear combination of (F_m, G_m)
/// reproducing `a` at z0. Solvable because Im(conj(F)G) > 0 at z0.
Complex zero_order_power(const GeneratingSequence& seq, int m, Complex a, Complex z0, Complex z);

/// a, b classify the Vekua equation the pair solves; A, B appear in the
/// successor relation b_(F_{m+1},G_{m+1}) = -B_(F_m,G_m). Derivatives are
/// central differences with the given step.
struct CharacteristicCoefficients {
    Complex a, b, A, B;
};
CharacteristicCoefficients characteristic_coefficients(const GeneratingSequence& seq, int m,
                                                       Complex z, double fd_step);

} // namespace vekua
