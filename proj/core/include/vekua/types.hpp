#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace vekua {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// z^m for integer m, computed in polar form so that large |m| does not
/// overflow through repeated multiplication.
inline Complex pow_int(Complex z, int m) {
    if (m == 0) return {1.0, 0.0};
    const double r = std::abs(z);
    if (r == 0.0) {
        if (m < 0) throw std::domain_error("pow_int: z = 0 with negative exponent");
        return {0.0, 0.0};
    }
    const double th = std::arg(z);
    const double rm = std::pow(r, m);
    return {rm * std::cos(m * th), rm * std::sin(m * th)};
}

/// Coefficient selector for the two real-linearly independent members of a
/// power family: the a=1 member and the a=i member.
enum class Coeff { One, I };

inline Complex coeff_value(Coeff c) {
    return c == Coeff::One ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
}

inline const char* coeff_label(Coeff c) { return c == Coeff::One ? "1" : "i"; }

} // namespace vekua
