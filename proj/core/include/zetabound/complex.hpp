#pragma once

#include <cmath>
#include <complex>

namespace zetabound {

using Complex = std::complex<double>;

// base^e for real base > 0.  Split into magnitude and phase so that a real
// exponent yields an exactly real result (imag stays 0.0, not sin-of-pi noise).
inline Complex pow_real_base(double base, const Complex& e) {
    const double lb = std::log(base);
    return std::polar(std::exp(e.real() * lb), e.imag() * lb);
}

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace zetabound
