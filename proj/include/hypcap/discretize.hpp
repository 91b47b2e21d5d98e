#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypcap/boundary.hpp"

namespace hypcap {

// Grading map [0,1] -> [0,1] with node density ~ distance^p at both endpoints.
inline double sigma(double x, double p = 3.0) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::pow(x, p), b = std::pow(1.0 - x, p);
    return a / (a + b);
}

inline double sigma_deriv(double x, double p = 3.0) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double a = std::pow(x, p), b = std::pow(1.0 - x, p);
    return p * std::pow(x, p - 1.0) * std::pow(1.0 - x, p - 1.0) / ((a + b) * (a + b));
}

inline double sigma_deriv2(double x, double p = 3.0) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    const double q = std::pow(x, p) + std::pow(1.0 - x, p);
    const double qp = p * (std::pow(x, p - 1.0) - std::pow(1.0 - x, p - 1.0));
    const double u = std::pow(x * (1.0 - x), p - 1.0);
    const double up = (p - 1.0) * std::pow(x * (1.0 - x), p - 2.0) * (1.0 - 2.0 * x);
    return p * (up * q - 2.0 * u * qp) / (q * q * q);
}

// Quadrature nodes on a boundary: uniform global parameters s_k = 2*pi*k/n,
// reparametrized arcwise by sigma when the boundary has corners so that nodes
// cluster there and the scaled derivative etp vanishes at corner nodes.
struct DiscretizedBoundary {
    JordanBoundary boundary;
    int n;             // actual node count: multiple of the arc count, n/arcs even
    int per_arc;
    double grading_p;  // 0 when the identity parametrization was used
    std::vector<double> s;
    std::vector<Point> et;    // positions
    std::vector<Point> etp;   // d(position)/ds
    std::vector<Point> etp2;  // d2(position)/ds2
    std::vector<char> corner;
};

inline DiscretizedBoundary discretize(const JordanBoundary& b, int n, double p = 3.0) {
    if (n < 64) throw std::invalid_argument("discretize: need n >= 64");
    if (!(p > 1.0)) throw std::invalid_argument("discretize: grading exponent must exceed 1");
    const int m = b.arc_count();
    int q = (n + m - 1) / m;
    if (q % 2) ++q;
    const int nn = q * m;
    const bool graded = b.has_corners();
    const double tp = 2.0 * std::numbers::pi;

    DiscretizedBoundary d{b, nn, q, graded ? p : 0.0, {}, {}, {}, {}, {}};
    d.s.reserve(nn);
    d.et.reserve(nn);
    d.etp.reserve(nn);
    d.etp2.reserve(nn);
    d.corner.reserve(nn);
    const double c = m / tp;
    for (int a = 0; a < m; ++a) {
        const Arc& arc = b.arc(a);
        for (int j = 0; j < q; ++j) {
            const double x = static_cast<double>(j) / q;
            const double w = graded ? sigma(x, p) : x;
            const double wp = graded ? sigma_deriv(x, p) : 1.0;
            const double wpp = graded ? sigma_deriv2(x, p) : 0.0;
            d.s.push_back(tp * (a * q + j) / nn);
            d.et.push_back(arc.pos(w));
            d.etp.push_back(arc.d1(w) * (wp * c));
            d.etp2.push_back(arc.d2(w) * (wp * c * wp * c) + arc.d1(w) * (wpp * c * c));
            d.corner.push_back((j == 0 && b.corner_at(a)) ? 1 : 0);
        }
    }
    return d;
}

}  // namespace hypcap
