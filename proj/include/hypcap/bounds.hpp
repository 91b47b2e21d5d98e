#pragma once

// Closed-form capacity and Jung-radius bounds:
//
//   h(n,t)  = arsh( sqrt(2n/(n+1)) sh(t/2) )          (Jung radius bound)
//   b1(t)   = 2 pi / log(1/th(t/4))                   (hyperbolic-disk capacity)
//   b2(t)   = 2 pi / log((1+sqrt(1+v^2))/v),  v = (2/sqrt 3) sh(t/2)
//   cap_upper_n(n,t) = omega_{n-1} / log(1/th(h(n,t)/2))^{n-1}
//   cap_seg(t) = 2 pi / mu(th(t/2))                   (geodesic segment, sharp)
//
// th(h(n,t)/2) is always evaluated through the identity
//   th(h/2) = v/(1 + sqrt(1+v^2)),   v = sqrt(2n/(n+1)) sh(t/2),
// never as th(arsh(...)), so the chain stays stable far beyond t = 40.
// Equivalently log(1/th(h/2)) = arsh(1/v), which is the form used for the
// capacity denominators. When a denominator underflows to zero the bound is
// not representable and +infinity is returned as the overflow flag.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypcap/special.hpp"

namespace hypcap {

namespace detail {

inline void require_dim_t(int n, double t, const char* who) {
    if (n < 2) throw std::domain_error(std::string(who) + ": dimension must be >= 2");
    if (!(t > 0.0)) throw std::domain_error(std::string(who) + ": diameter must be positive");
}

inline double jung_u(int n) { return std::sqrt(2.0 * n / (n + 1.0)); }

// log(1/th(h(n,t)/2)) = arsh(1/v)
inline double jung_log_inv_th(int n, double t) {
    const double v = jung_u(n) * std::sinh(t / 2.0);
    return std::asinh(1.0 / v);
}

}  // namespace detail

inline double jung_h(int n, double t) {
    detail::require_dim_t(n, t, "jung_h");
    return std::asinh(detail::jung_u(n) * std::sinh(t / 2.0));
}

inline double jung_th_half(int n, double t) {
    detail::require_dim_t(n, t, "jung_th_half");
    const double v = detail::jung_u(n) * std::sinh(t / 2.0);
    if (std::isinf(v)) return 1.0;
    return v / (1.0 + std::sqrt(1.0 + v * v));
}

struct JungRatioBounds {
    double low;    // sqrt(2(n+1)/n)
    double high;   // 2
    double ratio;  // t / h(n,t)
};

inline JungRatioBounds jung_ratio_bounds(int n, double t) {
    detail::require_dim_t(n, t, "jung_ratio_bounds");
    const JungRatioBounds r{std::sqrt(2.0 * (n + 1.0) / n), 2.0, t / jung_h(n, t)};
    // the bracket holds identically in exact arithmetic; a violation means a numeric defect
    if (!(r.ratio >= r.low * (1.0 - 1e-14) && r.ratio <= r.high * (1.0 + 1e-14)))
        throw std::runtime_error("jung_ratio_bounds: ratio escaped its proven bracket");
    return r;
}

inline double b1(double t) {
    if (!(t > 0.0)) throw std::domain_error("b1: diameter must be positive");
    // log(1/th(t/4)) = 2 artanh(exp(-t/2))
    const double den = 2.0 * std::atanh(std::exp(-t / 2.0));
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / den;
}

inline double b2(double t) {
    if (!(t > 0.0)) throw std::domain_error("b2: diameter must be positive");
    const double den = detail::jung_log_inv_th(2, t);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / den;
}

// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2), with Gamma evaluated by the exact
// recurrence from Gamma(1) = 1, Gamma(1/2) = sqrt(pi).
struct DimensionConstant {
    int n;
    double omega;
};

inline DimensionConstant surface_area(int n) {
    if (n < 2) throw std::domain_error("surface_area: dimension must be >= 2");
    double g = (n % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
    for (double x = (n % 2 == 0) ? 1.0 : 0.5; x < n / 2.0 - 0.25; x += 1.0) g *= x;
    const double omega = 2.0 * std::pow(std::numbers::pi, n / 2.0) / g;
    return DimensionConstant{n, omega};
}

inline double cap_upper_n(int n, double t) {
    detail::require_dim_t(n, t, "cap_upper_n");
    const double den = std::pow(detail::jung_log_inv_th(n, t), n - 1);
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return surface_area(n).omega / den;
}

inline double cap_seg(double t) {
    if (!(t > 0.0)) throw std::domain_error("cap_seg: length must be positive");
    const double r = std::tanh(t / 2.0);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::numbers::pi / mu(r);
}

// Quasiconformal image-diameter bound th(rho(f(E))/2) <= 4 th(h(2,t)/2)^{1/K}.
// A right-hand side >= 1 carries no information (th never exceeds 1); such
// values are flagged vacuous, not clamped.
struct QcBound {
    double value;
    bool vacuous;
};

inline QcBound qc_diameter_bound(double K, double t) {
    if (!(K >= 1.0)) throw std::domain_error("qc_diameter_bound: K must be >= 1");
    if (!(t > 0.0)) throw std::domain_error("qc_diameter_bound: diameter must be positive");
    const double v = 4.0 * std::pow(jung_th_half(2, t), 1.0 / K);
    return QcBound{v, v >= 1.0};
}

// Jung bound for phi-uniform domains: arsh((2/sqrt 3) sh(phi(dE/dist)/2)).
inline double jung_phi_uniform(const std::function<double(double)>& phi, double dE, double dist) {
    if (!(dE > 0.0) || !(dist > 0.0))
        throw std::domain_error("jung_phi_uniform: dE and dist must be positive");
    const double p = phi(dE / dist);
    return std::asinh(2.0 / std::sqrt(3.0) * std::sinh(p / 2.0));
}

struct BoundsReport {
    double t = 0.0;
    double cap_seg = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double jung_radius_2d = 0.0;  // h(2,t)
    struct DimEntry {
        int n;
        double h;          // h(n,t)
        double cap_upper;  // cap_upper_n(n,t)
    };
    std::vector<DimEntry> dims;
};

inline BoundsReport make_bounds_report(double t, const std::vector<int>& dims = {}) {
    BoundsReport rep;
    rep.t = t;
    rep.cap_seg = cap_seg(t);
    rep.b1 = b1(t);
    rep.b2 = b2(t);
    rep.jung_radius_2d = jung_h(2, t);
    for (int n : dims) rep.dims.push_back({n, jung_h(n, t), cap_upper_n(n, t)});
    return rep;
}

}  // namespace hypcap
