#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypcap/boundary.hpp"
#include "hypcap/discretize.hpp"
#include "hypcap/hyperbolic.hpp"

namespace hypcap {

struct MapValue {
    Point w;
    bool near_boundary;  // z within 3 local node spacings of the boundary
};

// Conformal map f of the Jordan domain onto the unit disk with f(alpha) = 0
// and f'(alpha) > 0.  Writing f(z) = (z - alpha) exp(-h(z) + i theta0) with h
// analytic reduces the construction to the Dirichlet data Re h = log|z - alpha|
// on the boundary, solved as a second-kind integral equation for a double
// layer density mu; h is then the Cauchy integral of mu.  Interior values use
// the normalized quotient C[mu](z)/C[1](z), which stays accurate close to the
// boundary; boundary values use the principal-value limit, whose quadrature
// needs the parametrization's second derivative and skips the nodes next to
// corners, where the graded parametrization collapses and the limit loses
// accuracy.
class RiemannMap {
  public:
    RiemannMap(const JordanBoundary& b, Point alpha, int n)
        : domain_(b), alpha_(alpha), d_(discretize(b, n)) {
        if (!contains(alpha))
            throw std::invalid_argument("riemann_map: base point must lie inside the domain");
        build();
    }

    const JordanBoundary& domain() const { return domain_; }
    Point base_point() const { return alpha_; }
    int n_nodes() const { return d_.n; }
    const DiscretizedBoundary& nodes() const { return d_; }

    // image arguments of the boundary nodes; valid where phase_valid() is set
    const std::vector<double>& boundary_phases() const { return phases_; }
    const std::vector<char>& phase_valid() const { return phase_ok_; }
    // worst deviation of |f| from 1 over the boundary nodes
    double boundary_error() const { return boundary_error_; }

    bool contains(Point z) const {
        try {
            return domain_.winding_number(z, 256) == 1;
        } catch (const std::exception&) {
            return false;
        }
    }

    MapValue evaluate_ex(Point z) const {
        Point num{0.0, 0.0}, den{0.0, 0.0};
        bool near = false;
        for (int j = 0; j < d_.n; ++j) {
            const Point dd = d_.et[j] - z;
            const double ad = std::abs(dd);
            if (ad < 3.0 * sp_[j]) near = true;
            const Point w = d_.etp[j] / dd;
            num += mu_[j] * w;
            den += w;
        }
        const Point c = num / den;
        return {(z - alpha_) * std::exp(-c + Point{0.0, theta0_}), near};
    }

    Point operator()(Point z) const { return evaluate_ex(z).w; }

  private:
    Point cauchy_quotient(Point z) const {
        Point num{0.0, 0.0}, den{0.0, 0.0};
        for (int j = 0; j < d_.n; ++j) {
            const Point w = d_.etp[j] / (d_.et[j] - z);
            num += mu_[j] * w;
            den += w;
        }
        return num / den;
    }

    void build() {
        const int n = d_.n;
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd g(n);
        for (int i = 0; i < n; ++i) {
            double rowsum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double k = std::imag(d_.etp[j] / (d_.et[j] - d_.et[i])) / n;
                A(i, j) = k;
                rowsum += k;
            }
            A(i, i) = 1.0 - rowsum;
            g(i) = std::log(std::abs(d_.et[i] - alpha_));
        }
        Eigen::PartialPivLU<Eigen::Ref<Eigen::MatrixXd>> lu(A);
        const Eigen::VectorXd mu = lu.solve(g);
        mu_.assign(mu.data(), mu.data() + n);

        sp_.resize(n);
        for (int j = 0; j < n; ++j) sp_[j] = std::abs(d_.et[(j + 1) % n] - d_.et[j]);

        theta0_ = 0.0;
        theta0_ = std::imag(cauchy_quotient(alpha_));

        std::vector<char> near_corner(n, 0);
        for (int i = 0; i < n; ++i) {
            if (!d_.corner[i]) continue;
            for (int off = -3; off <= 3; ++off)
                near_corner[((i + off) % n + n) % n] = 1;
        }

        phases_.assign(n, 0.0);
        phase_ok_.assign(n, 0);
        boundary_error_ = 0.0;
        for (int i = 0; i < n; ++i) {
            if (near_corner[i]) continue;
            Point s{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s += mu_[j] * d_.etp[j] / (d_.et[j] - d_.et[i]);
            }
            s += mu_[i] * d_.etp2[i] / (2.0 * d_.etp[i]);
            const Point c = s / Point{0.0, static_cast<double>(n)} + Point{mu_[i] / 2.0, 0.0};
            const Point f = (d_.et[i] - alpha_) * std::exp(-c + Point{0.0, theta0_});
            phases_[i] = std::arg(f);
            phase_ok_[i] = 1;
            boundary_error_ = std::max(boundary_error_, std::abs(std::abs(f) - 1.0));
        }
        if (boundary_error_ > 1e-3)
            throw std::runtime_error(
                "riemann_map: boundary images strayed from the unit circle; increase n");
    }

    JordanBoundary domain_;
    Point alpha_;
    DiscretizedBoundary d_;
    std::vector<double> mu_;
    std::vector<double> sp_;  // local node spacing
    std::vector<double> phases_;
    std::vector<char> phase_ok_;
    double theta0_ = 0.0;
    double boundary_error_ = 0.0;
};

inline RiemannMap riemann_map(const JordanBoundary& b, Point alpha, int n) {
    return RiemannMap(b, alpha, n);
}

namespace detail {
inline Point clamp_to_disk(Point w) {
    const double a = std::abs(w);
    if (a >= 1.0) w *= (1.0 - 1e-16) / a;
    return w;
}
}  // namespace detail

inline double rho_G(const RiemannMap& m, Point x, Point y) {
    if (!m.contains(x) || !m.contains(y))
        throw std::domain_error("rho_G: both points must lie inside the domain");
    return rho_disk(detail::clamp_to_disk(m(x)), detail::clamp_to_disk(m(y)));
}

// Hyperbolic diameter of the region bounded by e, measured inside the mapped
// domain: exhaustive maximum of the disk distance over sampled boundary pairs.
inline double hyp_diameter(const RiemannMap& m, const JordanBoundary& e, int k) {
    if (k < 16) throw std::invalid_argument("hyp_diameter: need k >= 16");
    const int per_arc = (k + e.arc_count() - 1) / e.arc_count();
    const auto pts = e.sample_with_corners(per_arc);
    const std::size_t stride = std::max<std::size_t>(1, pts.size() / 8);
    for (std::size_t i = 0; i < pts.size(); i += stride)
        if (!m.contains(pts[i]))
            throw std::invalid_argument("hyp_diameter: set must lie strictly inside the domain");
    std::vector<Point> imgs;
    imgs.reserve(pts.size());
    for (const auto& z : pts) {
        const Point w = m(z);
        if (std::abs(w) >= 1.0)
            throw std::invalid_argument("hyp_diameter: set must lie strictly inside the domain");
        imgs.push_back(w);
    }
    return hyp_diameter_points(imgs);
}

}  // namespace hypcap
