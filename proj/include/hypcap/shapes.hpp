#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypcap/boundary.hpp"
#include "hypcap/hyperbolic.hpp"

namespace hypcap {

namespace detail {

// counterclockwise arc of |z - c| = r from p to q; both endpoints must lie on
// the circle
inline Arc ccw_arc_between(Point c, double r, Point p, Point q) {
    const double tp = 2.0 * std::numbers::pi;
    const double a0 = std::arg(p - c);
    double sweep = std::arg(q - c) - a0;
    sweep -= tp * std::floor(sweep / tp);
    if (sweep == 0.0) sweep = tp;
    return circle_arc(c, r, a0, a0 + sweep);
}

}  // namespace detail

// Intersection of the three hyperbolic disks B_rho(v_k, M) where the v_k are
// the cube-root rotations of r and M is their pairwise hyperbolic distance.
// Each disk is a Euclidean disk; the boundary is made of one arc per disk.
struct HypReuleauxTriangle {
    double r;
    double M;
    std::array<Point, 3> vertices;
    std::array<HypBall, 3> disks;
    JordanBoundary boundary;  // clockwise, ready for use as an inner curve
};

inline HypReuleauxTriangle hyp_reuleaux(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("hyp_reuleaux: need 0 < r < 1");
    std::array<Point, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = std::polar(r, 2.0 * std::numbers::pi * k / 3.0);
    const double M = rho_disk(v[0], v[1]);
    const std::array<HypBall, 3> disks{hyp_ball(v[0], M), hyp_ball(v[1], M), hyp_ball(v[2], M)};
    std::vector<Arc> arcs;
    arcs.reserve(3);
    for (int k = 0; k < 3; ++k) {
        // the arc from v_k to v_{k+1} lies on the disk about the third vertex
        const HypBall& d = disks[(k + 2) % 3];
        arcs.push_back(detail::ccw_arc_between(d.euc_center, d.euc_radius, v[k], v[(k + 1) % 3]));
    }
    JordanBoundary ccw{std::move(arcs)};
    return {r, M, v, disks, ccw.reversed()};
}

inline bool contains(const HypReuleauxTriangle& T, Point z, double slack = 1e-14) {
    for (const auto& d : T.disks)
        if (std::abs(z - d.euc_center) > d.euc_radius + slack) return false;
    return true;
}

// Intersection of three Euclidean disks of radius w about the vertices of an
// equilateral triangle of side w: a body of constant Euclidean width w.
struct EucReuleauxTriangle {
    double r;  // circumradius of the vertices
    double w;  // width = sqrt(3) * r
    Point center;
    std::array<Point, 3> vertices;
    JordanBoundary boundary;  // clockwise
    double hyp_diameter;      // maximized over sampled boundary pairs
};

inline EucReuleauxTriangle euc_reuleaux(double r, int per_arc = 256) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("euc_reuleaux: need 0 < r < 1");
    std::array<Point, 3> v;
    for (int k = 0; k < 3; ++k) v[k] = std::polar(r, 2.0 * std::numbers::pi * k / 3.0);
    const double w = std::abs(v[1] - v[0]);
    std::vector<Arc> arcs;
    arcs.reserve(3);
    for (int k = 0; k < 3; ++k)
        arcs.push_back(detail::ccw_arc_between(v[(k + 2) % 3], w, v[k], v[(k + 1) % 3]));
    JordanBoundary ccw{std::move(arcs)};
    const double diam = hyp_diameter_points(ccw.sample_with_corners(per_arc));
    return {r, w, Point{0.0, 0.0}, v, ccw.reversed(), diam};
}

inline bool contains(const EucReuleauxTriangle& E, Point z, double slack = 1e-14) {
    for (const auto& v : E.vertices)
        if (std::abs(z - v) > E.w + slack) return false;
    return true;
}

// Scales a Euclidean Reuleaux triangle so that its hyperbolic diameter equals
// t.  The diameter grows strictly from 0 to infinity as the circumradius runs
// over (0, 1), so bisection cannot fail.
inline EucReuleauxTriangle euc_reuleaux_with_hyp_diameter(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("euc_reuleaux_with_hyp_diameter: need 0 < t < inf");
    double lo = 1e-12, hi = 1.0 - 1e-12;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (euc_reuleaux(mid, 96).hyp_diameter < t)
            lo = mid;
        else
            hi = mid;
    }
    return euc_reuleaux(0.5 * (lo + hi), 512);
}

// Circle bounding the hyperbolic disk about 0 with hyperbolic diameter t,
// oriented clockwise for use as an inner curve.
inline JordanBoundary hyp_disk_shape(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("hyp_disk_shape: need 0 < t < inf");
    return circle_boundary(Point{0.0, 0.0}, std::tanh(t / 4.0), false);
}

// Simple counterclockwise polygon; rejects self-intersecting or clockwise input.
inline JordanBoundary polygon(const std::vector<Point>& vertices) {
    JordanBoundary b = polygon_boundary(vertices);
    if (!b.is_ccw()) throw std::invalid_argument("polygon: vertices must be counterclockwise");
    return b;
}

// winding-number containment; z must keep a positive distance from the curve
inline bool encloses(const JordanBoundary& b, Point z, int per_arc = 512) {
    return b.winding_number(z, per_arc) != 0;
}

}  // namespace hypcap
