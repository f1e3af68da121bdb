#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace osgt::quadrature {

struct Outcome {
    double value = 0.0;
    double abs_error = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK dqk15 constants).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// Gauss abscissae are xgk[1], xgk[3], xgk[5] and the center xgk[7] = 0.
template <typename F>
void gk15(F&& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += wgk[j] * fsum;
        if (j % 2 == 1) resg += wg[(j - 1) / 2] * fsum;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over the initial partition given by
/// `points` (strictly increasing; place kinks of the integrand there).
/// Splits the interval with the largest error estimate until
///   sum(err) <= max(abs_tol, rel_tol * |sum(value)|)
/// or the interval budget is exhausted (converged = false in that case).
template <typename F>
Outcome integrate(F&& f, std::span<const double> points, double rel_tol,
                  double abs_tol, std::size_t max_intervals = 20000) {
    struct Segment {
        double a, b, value, error;
        bool operator<(const Segment& o) const { return error < o.error; }
    };

    Outcome out;
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_err = 0.0;

    auto push = [&](double a, double b) {
        double v = 0.0;
        double e = 0.0;
        detail::gk15(f, a, b, v, e);
        out.evaluations += 15;
        heap.push({a, b, v, e});
        total += v;
        total_err += e;
    };

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] < points[i + 1]) push(points[i], points[i + 1]);
    }

    auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

    while (total_err > tolerance() && heap.size() < max_intervals) {
        Segment s = heap.top();
        heap.pop();
        total -= s.value;
        total_err -= s.error;
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {  // interval narrowed to machine width
            total += s.value;
            total_err += s.error;
            break;
        }
        push(s.a, mid);
        push(mid, s.b);
    }

    out.value = total;
    out.abs_error = total_err;
    out.converged = total_err <= tolerance();
    return out;
}

}  // namespace osgt::quadrature
