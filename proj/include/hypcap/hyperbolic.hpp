#pragma once

// Closed-form hyperbolic geometry of the Poincare disk B^2:
// distances, balls, geodesics and diameters of finite point sets.
//
// The metric is determined by
//   sh^2(rho(x,y)/2) = |x-y|^2 / ((1-|x|^2)(1-|y|^2)),
// i.e. rho(x,y) = 2*arsh( |x-y| / sqrt((1-|x|^2)(1-|y|^2)) ).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypcap {

using Point = std::complex<double>;

// 1-|z|^2 evaluated as (1-|z|)(1+|z|); avoids cancellation for |z| -> 1.
inline double one_minus_abs_sq(const Point& z) {
    const double a = std::abs(z);
    return (1.0 - a) * (1.0 + a);
}

inline void require_in_disk(const Point& z, const char* who) {
    if (!(std::abs(z) < 1.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error(std::string(who) + ": point must lie strictly inside the unit disk");
}

// Disk automorphism T_a(z) = (z-a)/(1 - conj(a) z); T_a(a) = 0.
inline Point mobius(const Point& a, const Point& z) {
    return (z - a) / (1.0 - std::conj(a) * z);
}

inline Point mobius_inverse(const Point& a, const Point& z) {
    return (z + a) / (1.0 + std::conj(a) * z);
}

inline double rho_disk(const Point& x, const Point& y) {
    require_in_disk(x, "rho_disk");
    require_in_disk(y, "rho_disk");
    const double num = std::abs(x - y);
    const double den = std::sqrt(one_minus_abs_sq(x) * one_minus_abs_sq(y));
    return 2.0 * std::asinh(num / den);
}

// Hyperbolic ball B_rho(q,R) coincides with a Euclidean ball B(j,h):
// with t = th(R/2),  j = q(1-t^2)/(1-|q|^2 t^2),  h = (1-|q|^2) t/(1-|q|^2 t^2).
struct HypBall {
    Point center;        // hyperbolic center q
    double radius;       // hyperbolic radius R
    Point euc_center;    // j
    double euc_radius;   // h
};

inline HypBall hyp_ball(const Point& q, double R) {
    require_in_disk(q, "hyp_ball");
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::domain_error("hyp_ball: radius must be positive and finite");
    const double t = std::tanh(R / 2.0);
    const double qq = std::norm(q);
    const double den = 1.0 - qq * t * t;
    return HypBall{q, R, q * ((1.0 - t * t) / den), (1.0 - qq) * t / den};
}

// m points on the geodesic J[x,y], endpoints included, with equal hyperbolic
// gaps. Computed by moving x to the origin (where geodesics through 0 are
// Euclidean radii) and mapping back.
inline std::vector<Point> geodesic_segment(const Point& x, const Point& y, int m) {
    require_in_disk(x, "geodesic_segment");
    require_in_disk(y, "geodesic_segment");
    if (x == y) throw std::domain_error("geodesic_segment: endpoints coincide");
    if (m < 2) throw std::domain_error("geodesic_segment: need at least 2 samples");
    const Point w = mobius(x, y);
    const double L = 2.0 * std::atanh(std::abs(w));  // rho(0, w)
    const Point dir = w / std::abs(w);
    std::vector<Point> out(static_cast<std::size_t>(m));
    out.front() = x;
    out.back() = y;
    for (int k = 1; k + 1 < m; ++k) {
        const double d = L * static_cast<double>(k) / (m - 1);
        out[static_cast<std::size_t>(k)] = mobius_inverse(x, std::tanh(d / 2.0) * dir);
    }
    return out;
}

struct GeodesicSegment {
    Point a, b;

    GeodesicSegment(const Point& x, const Point& y) : a(x), b(y) {
        require_in_disk(x, "GeodesicSegment");
        require_in_disk(y, "GeodesicSegment");
        if (x == y) throw std::domain_error("GeodesicSegment: endpoints coincide");
    }

    double length() const { return rho_disk(a, b); }
    std::vector<Point> sample(int m) const { return geodesic_segment(a, b, m); }
};

// Max of rho_disk over all pairs; exact brute force. The maximum of the
// monotone quantity |x-y|^2/((1-|x|^2)(1-|y|^2)) is located first so asinh
// is taken once.
inline double hyp_diameter_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("hyp_diameter_points: empty input");
    const std::size_t k = pts.size();
    std::vector<double> om(k);
    for (std::size_t i = 0; i < k; ++i) {
        require_in_disk(pts[i], "hyp_diameter_points");
        om[i] = one_minus_abs_sq(pts[i]);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const double s = std::norm(pts[i] - pts[j]) / (om[i] * om[j]);
            if (s > best) best = s;
        }
    return 2.0 * std::asinh(std::sqrt(best));
}

}  // namespace hypcap
