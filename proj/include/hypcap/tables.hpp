#pragma once

// Built-in experiment geometries and the row computations behind the CLI's
// table1 / table2 / quotients subcommands.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypcap/bounds.hpp"
#include "hypcap/capacity.hpp"
#include "hypcap/conformal.hpp"
#include "hypcap/shapes.hpp"

namespace hypcap {

// Simply connected octagon: a 3x1 rectangle with a rectangular notch cut
// into the top edge, reaching down to height 0.2 over 1 <= x <= 2.
inline JordanBoundary notched_polygon() {
    return polygon({Point{0.0, 0.0}, Point{3.0, 0.0}, Point{3.0, 1.0}, Point{2.0, 1.0},
                    Point{2.0, 0.2}, Point{1.0, 0.2}, Point{1.0, 1.0}, Point{0.0, 1.0}});
}

// axis-aligned square about c with half side h
inline JordanBoundary centered_square(Point c, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("centered_square: half side must be positive");
    return polygon({c + Point{-h, -h}, c + Point{h, -h}, c + Point{h, h}, c + Point{-h, h}});
}

// Circumradius r of the origin-centered equilateral vertex triple whose
// pairwise hyperbolic distance is t; inverts sh(t/2) = sqrt(3) r / (1 - r^2).
inline double circumradius_for_vertex_distance(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("circumradius_for_vertex_distance: need 0 < t < inf");
    const double S = std::sinh(t / 2.0);
    return 2.0 * S / (std::sqrt(3.0 + 4.0 * S * S) + std::sqrt(3.0));
}

// square of half side h about 0.5+0.5i inside the notched polygon: hyperbolic
// diameter (through the supplied map of the polygon) and condenser capacity
struct SquareRow {
    double h = 0.0;
    double hyp_diam = 0.0;
    double cap = 0.0;
    double cap_err_est = 0.0;
    int n_nodes = 0;
    std::string error;  // empty on success
};

inline SquareRow table1_row(const RiemannMap& polygon_map, double h, int n_cap,
                            int diam_samples = 1024) {
    SquareRow row;
    row.h = h;
    if (!(h > 0.0 && h < 0.5)) {
        row.error = "h must lie in (0, 0.5)";
        return row;
    }
    const JordanBoundary e = centered_square(Point{0.5, 0.5}, h);
    try {
        row.hyp_diam = hyp_diameter(polygon_map, e, diam_samples);
    } catch (const std::exception& ex) {
        row.error = ex.what();
        return row;
    }
    try {
        const Condenser c = make_condenser(notched_polygon(), e, Point{1.5, 0.1}, Point{0.5, 0.5});
        const CapacityResult cr = capacity(c, n_cap);
        row.cap = cr.value;
        row.cap_err_est = cr.error_estimate;
        row.n_nodes = cr.n_nodes;
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    return row;
}

// Reuleaux triangles with vertex circumradius r in the unit disk: closed-form
// bound columns plus solver capacities of the hyperbolic triangle T and of
// the Euclidean triangle E of equal hyperbolic diameter.
struct ReuleauxRow {
    double r = 0.0;
    double t = 0.0;             // hyperbolic vertex distance = diameter of T
    double cap_seg = 0.0;       // geodesic segment of length t (sharp lower bound)
    double cap_euc_tri = 0.0;   // solver: cap(disk, E)
    double cap_disk = 0.0;      // b1(t), hyperbolic disk of diameter t
    double cap_hyp_tri = 0.0;   // solver: cap(disk, T)
    double cap_jung = 0.0;      // b2(t), Jung-ball upper bound
    double euc_tri_err_est = 0.0;
    double hyp_tri_err_est = 0.0;
    int n_nodes = 0;
    std::string error;  // empty on success
};

inline ReuleauxRow table2_row(double r, int n, bool with_solver = true) {
    ReuleauxRow row;
    row.r = r;
    if (!(r > 0.0 && r < 1.0)) {
        row.error = "r must lie in (0, 1)";
        return row;
    }
    const HypReuleauxTriangle T = hyp_reuleaux(r);
    row.t = T.M;
    row.cap_seg = cap_seg(T.M);
    row.cap_disk = b1(T.M);
    row.cap_jung = b2(T.M);
    if (!with_solver) return row;
    const JordanBoundary outer = circle_boundary(Point{0.0, 0.0}, 1.0);
    const Point alpha{0.4 + 0.6 * r, 0.0};  // on the real axis, inside the ring
    const Point z2{0.0, 0.0};
    try {
        const CapacityResult cr = capacity(make_condenser(outer, T.boundary, alpha, z2), n);
        row.cap_hyp_tri = cr.value;
        row.hyp_tri_err_est = cr.error_estimate;
        row.n_nodes = cr.n_nodes;
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    try {
        const EucReuleauxTriangle E = euc_reuleaux_with_hyp_diameter(T.M);
        const CapacityResult cr = capacity(make_condenser(outer, E.boundary, alpha, z2), n);
        row.cap_euc_tri = cr.value;
        row.euc_tri_err_est = cr.error_estimate;
        row.n_nodes = cr.n_nodes;
    } catch (const std::exception& ex) {
        if (!row.error.empty()) row.error += "; ";
        row.error += ex.what();
    }
    return row;
}

// capacities of the diameter-t bodies normalized by the disk bound b1(t)
struct QuotientRow {
    double t = 0.0;
    double b2_over_b1 = 0.0;
    double hyp_tri_over_b1 = 0.0;
    double one = 1.0;  // b1/b1, the reference line
    double euc_tri_over_b1 = 0.0;
    double limit = 2.0 / std::numbers::sqrt3;  // large-t limit of b2/b1
    std::string error;  // empty on success
};

inline QuotientRow quotient_row(double t, int n) {
    QuotientRow row;
    row.t = t;
    if (!(t > 0.0) || !std::isfinite(t)) {
        row.error = "t must lie in (0, inf)";
        return row;
    }
    const double bb1 = b1(t);
    row.b2_over_b1 = b2(t) / bb1;
    const ReuleauxRow rr = table2_row(circumradius_for_vertex_distance(t), n);
    row.hyp_tri_over_b1 = rr.cap_hyp_tri / bb1;
    row.euc_tri_over_b1 = rr.cap_euc_tri / bb1;
    row.error = rr.error;
    return row;
}

}  // namespace hypcap
