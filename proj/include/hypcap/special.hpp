#pragma once

// Complete elliptic integrals via the arithmetic-geometric mean, the
// Grotzsch modulus mu(r) and the planar Grotzsch/Teichmuller capacities.
//
//   K(r)   = pi / (2 AGM(1, r')),   r' = sqrt(1-r^2)
//   mu(r)  = (pi/2) K(r')/K(r) = (pi/2) AGM(1, r')/AGM(1, r)
//   gamma2(s) = 2 pi / mu(1/s),  s > 1
//   tau2(s)   = gamma2(sqrt(s+1))/2,  s > 0

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hypcap {

// mu(r) carries its full accuracy claim only for r >= this; below it the
// direct AGM still converges but the calibration is not asserted.
inline constexpr double mu_stable_min = 1e-8;

inline double agm(double a, double b) {
    // quadratic convergence; the iterate count is generous for doubles
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return 0.5 * (a + b);
}

inline double ellip_K(double r) {
    if (!(r >= 0.0) || r >= 1.0)
        throw std::domain_error("ellip_K: modulus must satisfy 0 <= r < 1");
    const double rp = std::sqrt((1.0 - r) * (1.0 + r));
    return std::numbers::pi / (2.0 * agm(1.0, rp));
}

namespace detail {
inline double mu_direct(double r) {
    const double rp = std::sqrt((1.0 - r) * (1.0 + r));
    return std::numbers::pi / 2.0 * agm(1.0, rp) / agm(1.0, r);
}
}  // namespace detail

inline double mu(double r) {
    if (!(r > 0.0) || r >= 1.0)
        throw std::domain_error("mu: argument must lie in (0,1)");
    if (r > 0.99) {
        // mu(r) mu(r') = pi^2/4; the complementary branch avoids the
        // cancellation-prone ratio for r -> 1
        const double rp = std::sqrt((1.0 - r) * (1.0 + r));
        constexpr double pi2_4 = std::numbers::pi * std::numbers::pi / 4.0;
        return pi2_4 / detail::mu_direct(rp);
    }
    return detail::mu_direct(r);
}

inline double gamma2(double s) {
    if (!(s > 1.0)) throw std::domain_error("gamma2: argument must exceed 1");
    return 2.0 * std::numbers::pi / mu(1.0 / s);
}

inline double tau2(double s) {
    if (!(s > 0.0)) throw std::domain_error("tau2: argument must be positive");
    return gamma2(std::sqrt(s + 1.0)) / 2.0;
}

}  // namespace hypcap
