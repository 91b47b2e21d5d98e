#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypcap/hyperbolic.hpp"

namespace hypcap {

// One smooth piece of a boundary curve, parametrized over the local
// parameter x in [0, 1].  pos/d1/d2 are position and derivatives w.r.t. x.
struct Arc {
    std::function<Point(double)> pos;
    std::function<Point(double)> d1;
    std::function<Point(double)> d2;
};

inline Arc line_arc(Point a, Point b) {
    if (std::abs(b - a) == 0.0)
        throw std::invalid_argument("line_arc: endpoints coincide");
    const Point d = b - a;
    return Arc{
        [a, d](double x) { return a + x * d; },
        [d](double) { return d; },
        [](double) { return Point{0.0, 0.0}; },
    };
}

// Circular arc of radius r about c, swept from angle a0 to a1.  The sweep is
// signed: a1 > a0 runs counterclockwise, a1 < a0 clockwise.
inline Arc circle_arc(Point c, double r, double a0, double a1) {
    if (!(r > 0.0)) throw std::invalid_argument("circle_arc: radius must be positive");
    if (a1 == a0) throw std::invalid_argument("circle_arc: empty sweep");
    const double sweep = a1 - a0;
    return Arc{
        [c, r, a0, sweep](double x) { return c + r * std::polar(1.0, a0 + sweep * x); },
        [c, r, a0, sweep](double x) {
            return Point{0.0, sweep * r} * std::polar(1.0, a0 + sweep * x);
        },
        [c, r, a0, sweep](double x) {
            return Point{-sweep * sweep * r, 0.0} * std::polar(1.0, a0 + sweep * x);
        },
    };
}

namespace detail {

// Gauss-Legendre nodes and weights on [0, 1].
inline void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = 0.5 * (1.0 - z);
        x[n - 1 - i] = 0.5 * (1.0 + z);
        w[i] = w[n - 1 - i] = 1.0 / ((1.0 - z * z) * pp * pp);
    }
}

inline bool segments_cross(Point a, Point b, Point c, Point d) {
    const auto cross = [](Point u, Point v) { return u.real() * v.imag() - u.imag() * v.real(); };
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0.0) != (d2 > 0.0)) && ((d3 > 0.0) != (d4 > 0.0));
}

}  // namespace detail

// Piecewise-smooth Jordan curve made of arcs joined end to end.  The global
// parameter s runs over [0, 2*pi) with each arc covering an equal subinterval.
// Construction rejects open chains, degenerate tangents and cusps (junction
// angle pi); corners (any other nonzero junction angle) are recorded.
class JordanBoundary {
  public:
    explicit JordanBoundary(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
        if (arcs_.empty()) throw std::invalid_argument("boundary needs at least one arc");
        const int m = static_cast<int>(arcs_.size());
        corner_.assign(m, false);

        double scale = 0.0;
        for (const auto& a : arcs_) scale = std::max(scale, std::abs(a.pos(0.0)));
        scale = std::max(scale, 1e-30);

        for (int k = 0; k < m; ++k) {
            const Arc& prev = arcs_[(k + m - 1) % m];
            const Arc& next = arcs_[k];
            if (std::abs(prev.pos(1.0) - next.pos(0.0)) > 1e-9 * scale)
                throw std::invalid_argument("boundary arcs do not close up");
            const Point tin = prev.d1(1.0);
            const Point tout = next.d1(0.0);
            if (std::abs(tin) == 0.0 || std::abs(tout) == 0.0)
                throw std::invalid_argument("degenerate tangent at arc junction");
            const double ang = std::arg(tout / tin);
            if (std::abs(ang) < 1e-9) continue;
            if (std::numbers::pi - std::abs(ang) < 1e-9)
                throw std::invalid_argument("cusp at arc junction");
            corner_[k] = true;
        }
        validate(64);
    }

    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int k) const { return arcs_.at(static_cast<std::size_t>(k)); }

    // True when arcs k-1 and k meet at a nonzero angle (index mod arc count).
    bool corner_at(int k) const {
        const int m = arc_count();
        return corner_[static_cast<std::size_t>(((k % m) + m) % m)];
    }

    bool has_corners() const {
        for (bool c : corner_)
            if (c) return true;
        return false;
    }

    // arc index and local parameter for a global parameter value
    std::pair<int, double> locate(double s) const {
        const int m = arc_count();
        const double tp = 2.0 * std::numbers::pi;
        double u = std::fmod(s, tp);
        if (u < 0.0) u += tp;
        u = u * m / tp;
        int k = static_cast<int>(std::floor(u));
        if (k >= m) k = m - 1;
        return {k, u - k};
    }

    Point point(double s) const {
        const auto [k, x] = locate(s);
        return arcs_[static_cast<std::size_t>(k)].pos(x);
    }

    // derivative w.r.t. the global parameter s
    Point deriv(double s) const {
        const auto [k, x] = locate(s);
        const double f = arc_count() / (2.0 * std::numbers::pi);
        return arcs_[static_cast<std::size_t>(k)].d1(x) * f;
    }

    Point deriv2(double s) const {
        const auto [k, x] = locate(s);
        const double f = arc_count() / (2.0 * std::numbers::pi);
        return arcs_[static_cast<std::size_t>(k)].d2(x) * (f * f);
    }

    JordanBoundary reversed() const {
        std::vector<Arc> rev;
        rev.reserve(arcs_.size());
        for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it) {
            const Arc a = *it;
            rev.push_back(Arc{
                [a](double x) { return a.pos(1.0 - x); },
                [a](double x) { return -a.d1(1.0 - x); },
                [a](double x) { return a.d2(1.0 - x); },
            });
        }
        return JordanBoundary(std::move(rev));
    }

    // Green's theorem area; positive for counterclockwise traversal.
    double signed_area() const {
        std::vector<double> gx, gw;
        detail::gauss_legendre01(32, gx, gw);
        double area = 0.0;
        for (const auto& a : arcs_)
            for (std::size_t i = 0; i < gx.size(); ++i) {
                const Point p = a.pos(gx[i]);
                const Point d = a.d1(gx[i]);
                area += gw[i] * (p.real() * d.imag() - p.imag() * d.real());
            }
        return 0.5 * area;
    }

    bool is_ccw() const { return signed_area() > 0.0; }

    // winding number about z as accumulated turning of the sampled polyline;
    // z must keep a positive distance from the curve
    double winding(Point z, int per_arc = 512) const {
        const auto pts = sample_with_corners(per_arc);
        double total = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point a = pts[i] - z;
            const Point b = pts[(i + 1) % pts.size()] - z;
            if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
                throw std::invalid_argument("winding: point lies on the boundary");
            total += std::arg(b / a);
        }
        return total / (2.0 * std::numbers::pi);
    }

    int winding_number(Point z, int per_arc = 512) const {
        const double w = winding(z, per_arc);
        const double r = std::round(w);
        if (std::abs(w - r) > 0.25)
            throw std::runtime_error("winding: point too close to the boundary to classify");
        return static_cast<int>(r);
    }

    // n points at uniform global parameters (arc endpoints only hit when n is
    // a multiple of the arc count)
    std::vector<Point> sample(int n) const {
        if (n < 1) throw std::invalid_argument("sample: n must be positive");
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pts.push_back(point(2.0 * std::numbers::pi * i / n));
        return pts;
    }

    // per_arc points on every arc, starting at the arc's initial point, so
    // each junction (in particular each corner) appears exactly once
    std::vector<Point> sample_with_corners(int per_arc) const {
        if (per_arc < 1) throw std::invalid_argument("sample_with_corners: need per_arc >= 1");
        std::vector<Point> pts;
        pts.reserve(arcs_.size() * static_cast<std::size_t>(per_arc));
        for (const auto& a : arcs_)
            for (int j = 0; j < per_arc; ++j) pts.push_back(a.pos(static_cast<double>(j) / per_arc));
        return pts;
    }

    // rejects curves whose sampled polyline crosses itself
    void validate(int per_arc = 256) const {
        const auto pts = sample_with_corners(per_arc);
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point a = pts[i], b = pts[(i + 1) % n];
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (detail::segments_cross(a, b, pts[j], pts[(j + 1) % n]))
                    throw std::invalid_argument("boundary is self-intersecting");
            }
        }
    }

  private:
    std::vector<Arc> arcs_;
    std::vector<bool> corner_;
};

inline JordanBoundary circle_boundary(Point c, double r, bool ccw = true) {
    const double a1 = ccw ? 2.0 * std::numbers::pi : -2.0 * std::numbers::pi;
    return JordanBoundary({circle_arc(c, r, 0.0, a1)});
}

inline JordanBoundary polygon_boundary(const std::vector<Point>& vertices) {
    if (vertices.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::vector<Arc> arcs;
    arcs.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        arcs.push_back(line_arc(vertices[i], vertices[(i + 1) % vertices.size()]));
    return JordanBoundary(std::move(arcs));
}

}  // namespace hypcap
