#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypcap/boundary.hpp"
#include "hypcap/discretize.hpp"

namespace hypcap {

// Raised when the a-posteriori error estimate shows the node count cannot
// resolve the geometry (e.g. nearly touching boundaries).
class resolution_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ring domain between two Jordan curves, with a reference point alpha in the
// ring and a reference point z2 enclosed by the inner curve.
struct Condenser {
    JordanBoundary outer;  // counterclockwise
    JordanBoundary inner;  // clockwise
    Point alpha;
    Point z2;
};

namespace detail {

inline Point curve_centroid(const JordanBoundary& b) {
    const auto pts = b.sample_with_corners(64);
    Point c{0.0, 0.0};
    for (const auto& p : pts) c += p;
    return c / static_cast<double>(pts.size());
}

inline bool ring_contains(const Condenser& c, Point z) {
    try {
        return c.outer.winding_number(z) == 1 && c.inner.winding_number(z) == 0;
    } catch (const std::exception&) {
        return false;
    }
}

inline void validate_condenser(const Condenser& c) {
    for (const auto& z : c.inner.sample_with_corners(16))
        if (c.outer.winding_number(z) != 1)
            throw std::invalid_argument("condenser: inner curve must lie strictly inside the outer");
    if (c.outer.winding_number(c.z2) != 1 || c.inner.winding_number(c.z2) != -1)
        throw std::invalid_argument("condenser: z2 must lie inside the inner set");
    if (!ring_contains(c, c.alpha))
        throw std::invalid_argument("condenser: alpha must lie between the two curves");
}

}  // namespace detail

inline Condenser make_condenser(JordanBoundary outer, JordanBoundary inner, Point alpha, Point z2) {
    if (!outer.is_ccw()) outer = outer.reversed();
    if (inner.is_ccw()) inner = inner.reversed();
    Condenser c{std::move(outer), std::move(inner), alpha, z2};
    detail::validate_condenser(c);
    return c;
}

// Default reference points: z2 is the inner curve's sample centroid; alpha is
// the first midpoint of matched boundary points that lands inside the ring.
inline Condenser make_condenser(JordanBoundary outer, JordanBoundary inner) {
    if (!outer.is_ccw()) outer = outer.reversed();
    if (inner.is_ccw()) inner = inner.reversed();
    const Point z2 = detail::curve_centroid(inner);
    Condenser c{std::move(outer), std::move(inner), z2, z2};
    std::vector<Point> candidates;
    for (double s : {0.0, 0.7, 1.9, 3.1, 4.3, 5.5})
        candidates.push_back(0.5 * (c.inner.point(s) + c.outer.point(s)));
    candidates.push_back(0.5 * (detail::curve_centroid(c.outer) + z2));
    for (const auto& a : candidates)
        if (detail::ring_contains(c, a)) {
            c.alpha = a;
            detail::validate_condenser(c);
            return c;
        }
    throw std::invalid_argument("condenser: no default alpha found; pass one explicitly");
}

struct CapacityResult {
    double value;
    double error_estimate;  // |value(n) - value(n/2)|
    int n_nodes;            // per boundary
};

namespace detail {

// Dirichlet problem u = 0 on the outer curve, u = 1 on the inner one, solved
// with u = a*log|z - z2| + W[mu] where W is the double-layer potential of a
// density mu on both curves.  With the outer curve counterclockwise and the
// inner clockwise, the limit of W from inside the ring is mu/2 + pv W[mu] on
// both curves and pv W[1] = 1/2, which fixes the Nystrom diagonal by row sums
// and makes corner nodes (where the derivative factor vanishes) harmless.
// The inner density is gauged to zero mean; the capacity is the flux -2*pi*a.
inline double ring_capacity_once(const DiscretizedBoundary& bo, const DiscretizedBoundary& bi,
                                 Point z2) {
    const int n1 = bo.n, n2 = bi.n, nt = n1 + n2;
    std::vector<Point> et(static_cast<std::size_t>(nt)), etp(static_cast<std::size_t>(nt));
    std::vector<double> wt(static_cast<std::size_t>(nt));
    for (int j = 0; j < n1; ++j) {
        et[j] = bo.et[j];
        etp[j] = bo.etp[j];
        wt[j] = 1.0 / n1;
    }
    for (int j = 0; j < n2; ++j) {
        et[n1 + j] = bi.et[j];
        etp[n1 + j] = bi.etp[j];
        wt[n1 + j] = 1.0 / n2;
    }

    Eigen::MatrixXd A(nt + 1, nt + 1);
    Eigen::VectorXd rhs(nt + 1);
    for (int i = 0; i < nt; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < nt; ++j) {
            if (j == i) continue;
            const Point d = et[j] - et[i];
            const double k = wt[j] * std::imag(etp[j] / d);
            A(i, j) = k;
            rowsum += k;
        }
        A(i, i) = 1.0 - rowsum;
        A(i, nt) = std::log(std::abs(et[i] - z2));
        rhs(i) = (i < n1) ? 0.0 : 1.0;
    }
    for (int j = 0; j < nt; ++j) A(nt, j) = (j < n1) ? 0.0 : 1.0;
    A(nt, nt) = 0.0;
    rhs(nt) = 0.0;

    Eigen::PartialPivLU<Eigen::Ref<Eigen::MatrixXd>> lu(A);
    const Eigen::VectorXd x = lu.solve(rhs);
    return -2.0 * std::numbers::pi * x(nt);
}

}  // namespace detail

inline CapacityResult capacity(const Condenser& c, int n) {
    if (n < 128)
        throw std::invalid_argument("capacity: need n >= 128 so the half-resolution check can run");
    const auto bo = discretize(c.outer, n);
    const auto bi = discretize(c.inner, n);
    const double v = detail::ring_capacity_once(bo, bi, c.z2);
    const double vh = detail::ring_capacity_once(discretize(c.outer, n / 2),
                                                 discretize(c.inner, n / 2), c.z2);
    if (!std::isfinite(v) || !std::isfinite(vh))
        throw resolution_error("capacity: linear solve diverged");
    const double err = std::abs(v - vh);
    if (err > 0.1 * std::abs(v))
        throw resolution_error(
            "capacity: error estimate exceeds 10% of the value; the boundaries are too close "
            "for this n, increase it");
    return {v, err, bo.n};
}

// Doubles n until the relative error estimate drops below rel_tol.
inline CapacityResult capacity_refined(const Condenser& c, double rel_tol, int n0 = 128,
                                       int n_max = 4096) {
    std::string last_error;
    for (int n = n0; n <= n_max; n *= 2) {
        try {
            const CapacityResult r = capacity(c, n);
            if (r.error_estimate <= rel_tol * std::abs(r.value)) return r;
            last_error = "capacity: tolerance not reached at n = " + std::to_string(n);
        } catch (const resolution_error& e) {
            last_error = e.what();
        }
    }
    throw resolution_error(last_error + " (n_max reached)");
}

struct SweepItem {
    double param;
    std::optional<CapacityResult> result;
    std::string error;  // empty on success
};

// Runs one capacity computation per parameter; per-item failures are recorded
// and the sweep continues.
template <class MakeCondenser>
std::vector<SweepItem> capacity_sweep(MakeCondenser&& make, const std::vector<double>& params,
                                      int n) {
    std::vector<SweepItem> items;
    items.reserve(params.size());
    for (const double p : params) {
        SweepItem it{p, std::nullopt, {}};
        try {
            it.result = capacity(make(p), n);
        } catch (const std::exception& e) {
            it.error = e.what();
        }
        items.push_back(std::move(it));
    }
    return items;
}

}  // namespace hypcap
