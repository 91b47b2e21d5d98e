#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypcap/boundary.hpp"

namespace hypcap {

namespace detail {

// natural cubic spline through (t_k, v_k) with strictly increasing t
class CubicSpline {
  public:
    CubicSpline(std::vector<double> t, std::vector<double> v)
        : t_(std::move(t)), v_(std::move(v)) {
        const std::size_t n = t_.size();
        if (n < 2 || v_.size() != n) throw std::invalid_argument("spline: need >= 2 nodes");
        for (std::size_t i = 1; i < n; ++i)
            if (!(t_[i] > t_[i - 1])) throw std::invalid_argument("spline: nodes must increase");
        m_.assign(n, 0.0);
        if (n == 2) return;
        std::vector<double> c(n, 0.0), r(n, 0.0);
        // Thomas sweep; natural end conditions m_0 = m_{n-1} = 0
        double beta = 1.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = t_[i] - t_[i - 1], h1 = t_[i + 1] - t_[i];
            const double a = (i == 1) ? 0.0 : h0;
            const double b = 2.0 * (h0 + h1);
            const double rhs = 6.0 * ((v_[i + 1] - v_[i]) / h1 - (v_[i] - v_[i - 1]) / h0);
            const double w = (i == 1) ? 0.0 : a / beta;
            beta = b - w * c[i - 1];
            c[i] = h1;
            r[i] = rhs - w * r[i - 1];
            m_[i] = beta;  // store pivots temporarily
        }
        // back substitution; m_[i] holds the row pivot until overwritten
        for (std::size_t i = n - 2; i >= 1; --i) {
            const double upper = (i + 2 < n) ? c[i] * m_[i + 1] : 0.0;
            m_[i] = (r[i] - upper) / m_[i];
            if (i == 1) break;
        }
    }

    double eval(double x) const {
        const auto [i, a, b, h] = locate(x);
        return a * v_[i] + b * v_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    double deriv(double x) const {
        const auto [i, a, b, h] = locate(x);
        return (v_[i + 1] - v_[i]) / h +
               (-(3.0 * a * a - 1.0) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
    }

    double deriv2(double x) const {
        const auto [i, a, b, h] = locate(x);
        return a * m_[i] + b * m_[i + 1];
    }

  private:
    struct Loc {
        std::size_t i;
        double a, b, h;
    };
    Loc locate(double x) const {
        std::size_t lo = 0, hi = t_.size() - 1;
        if (x <= t_.front()) x = t_.front();
        if (x >= t_.back()) x = t_.back();
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (t_[mid] <= x ? lo : hi) = mid;
        }
        const double h = t_[lo + 1] - t_[lo];
        return {lo, (t_[lo + 1] - x) / h, (x - t_[lo]) / h, h};
    }

    std::vector<double> t_, v_, m_;
};

inline Arc spline_arc(std::vector<double> t, std::vector<Point> p, bool periodic) {
    if (periodic) {
        // pad with wrapped nodes so the natural end conditions act far away
        const std::size_t q = t.size() - 1;  // last node duplicates the first
        const std::size_t pad = std::min<std::size_t>(8, q - 1);
        std::vector<double> tt;
        std::vector<Point> pp;
        for (std::size_t k = q - pad; k < q; ++k) {
            tt.push_back(t[k] - 1.0);
            pp.push_back(p[k]);
        }
        tt.insert(tt.end(), t.begin(), t.end());
        pp.insert(pp.end(), p.begin(), p.end());
        for (std::size_t k = 1; k <= pad; ++k) {
            tt.push_back(t[k] + 1.0);
            pp.push_back(p[k]);
        }
        t = std::move(tt);
        p = std::move(pp);
    }
    std::vector<double> xs(p.size()), ys(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        xs[k] = p[k].real();
        ys[k] = p[k].imag();
    }
    auto sx = std::make_shared<const CubicSpline>(t, std::move(xs));
    auto sy = std::make_shared<const CubicSpline>(std::move(t), std::move(ys));
    return Arc{
        [sx, sy](double u) { return Point{sx->eval(u), sy->eval(u)}; },
        [sx, sy](double u) { return Point{sx->deriv(u), sy->deriv(u)}; },
        [sx, sy](double u) { return Point{sx->deriv2(u), sy->deriv2(u)}; },
    };
}

}  // namespace detail

struct BoundarySample {
    int arc_index;
    double t_param;  // local parameter in [0, 1)
    Point p;
};

// at least `points` samples spread evenly over the arcs; arc endpoints appear
// once, as the next arc's first sample
inline std::vector<BoundarySample> sample_boundary(const JordanBoundary& b, int points) {
    if (points < 2) throw std::invalid_argument("sample_boundary: need at least 2 points");
    const int m = b.arc_count();
    const int per = std::max(2, (points + m - 1) / m);
    std::vector<BoundarySample> rows;
    rows.reserve(static_cast<std::size_t>(m) * per);
    for (int a = 0; a < m; ++a)
        for (int j = 0; j < per; ++j) {
            const double x = static_cast<double>(j) / per;
            rows.push_back({a, x, b.arc(a).pos(x)});
        }
    return rows;
}

// rows: arc_index, t_param, x, y
inline void write_boundary_csv(std::ostream& os, const JordanBoundary& b, int points) {
    os << "arc_index,t_param,x,y\n";
    char buf[160];
    for (const auto& r : sample_boundary(b, points)) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.arc_index, r.t_param,
                      r.p.real(), r.p.imag());
        os << buf;
    }
}

// Rebuilds a boundary from the CSV format above with one cubic-spline arc per
// arc_index (periodic fit for single-arc curves).
inline JordanBoundary read_boundary_csv(std::istream& is) {
    std::vector<int> arc_of;
    std::vector<double> ts;
    std::vector<Point> ps;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        int a = 0;
        double t = 0, x = 0, y = 0;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &a, &t, &x, &y) != 4) {
            if (!saw_header) {
                saw_header = true;
                continue;
            }
            throw std::invalid_argument("boundary csv: malformed row: " + line);
        }
        saw_header = true;
        arc_of.push_back(a);
        ts.push_back(t);
        ps.push_back(Point{x, y});
    }
    if (ps.empty()) throw std::invalid_argument("boundary csv: no rows");

    int m = 0;
    for (int a : arc_of) m = std::max(m, a + 1);
    std::vector<std::vector<double>> at(static_cast<std::size_t>(m));
    std::vector<std::vector<Point>> ap(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (arc_of[k] < 0) throw std::invalid_argument("boundary csv: negative arc index");
        at[static_cast<std::size_t>(arc_of[k])].push_back(ts[k]);
        ap[static_cast<std::size_t>(arc_of[k])].push_back(ps[k]);
    }
    std::vector<Point> first(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        if (at[a].size() < 2) throw std::invalid_argument("boundary csv: arc with < 2 rows");
        first[a] = ap[a].front();
    }
    std::vector<Arc> arcs;
    for (int a = 0; a < m; ++a) {
        // close each arc with the next arc's first point
        at[a].push_back(1.0);
        ap[a].push_back(first[(a + 1) % m]);
        arcs.push_back(detail::spline_arc(std::move(at[a]), std::move(ap[a]), m == 1));
    }
    return JordanBoundary(std::move(arcs));
}

}  // namespace hypcap
