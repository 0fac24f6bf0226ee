#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "isacnet/core.hpp"

namespace isacnet {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    enum class Transform { none, log_substitution };
    Transform transform = Transform::none;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
    int evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double kGk15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGk15Weights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kG7Weights[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& error, int& evals) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fk[15];
    fk[7] = f(mid);
    for (int i = 1; i <= 7; ++i) {
        const double dx = h * kGk15Nodes[i];
        fk[7 - i] = f(mid - dx);
        fk[7 + i] = f(mid + dx);
    }
    evals += 15;
    double resk = kGk15Weights[0] * fk[7];
    double resg = kG7Weights[0] * fk[7];
    for (int i = 1; i <= 7; ++i) {
        resk += kGk15Weights[i] * (fk[7 - i] + fk[7 + i]);
        if (i % 2 == 0) resg += kG7Weights[i / 2] * (fk[7 - i] + fk[7 + i]);
    }
    value = resk * h;
    error = std::abs((resk - resg) * h);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

} // namespace detail

// Adaptive Gauss-Kronrod on a finite interval; largest-error-first splitting.
template <class F>
inline QuadResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<detail::Segment> heap;
    double v, e;
    detail::gk15(f, a, b, v, e, out.evaluations);
    heap.push({a, b, v, e});
    double total = v, toterr = e;
    for (int it = 0; it < spec.max_subdivisions; ++it) {
        if (toterr <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) break;
        const auto seg = heap.top();
        heap.pop();
        const double mid = 0.5 * (seg.a + seg.b);
        if (mid <= seg.a || mid >= seg.b) { // interval at float resolution
            heap.push(seg);
            break;
        }
        double v1, e1, v2, e2;
        detail::gk15(f, seg.a, mid, v1, e1, out.evaluations);
        detail::gk15(f, mid, seg.b, v2, e2, out.evaluations);
        total += v1 + v2 - seg.value;
        toterr += e1 + e2 - seg.error;
        heap.push({seg.a, mid, v1, e1});
        heap.push({mid, seg.b, v2, e2});
    }
    out.value = total;
    out.error = toterr;
    out.converged = toterr <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return out;
}

// Integral of f over [0, inf) for integrable, decaying integrands.
//   none:             adaptive integration over doubling windows.
//   log_substitution: z = e^u - 1, so z-integrable endpoint singularities and
//                     wide dynamic ranges map to a tame u-axis; windows double
//                     in u.
// Throws nothing; non-convergence is reported via the converged flag with the
// partial value retained.
template <class F>
inline QuadResult integrate_semi_infinite(const F& f, const QuadratureSpec& spec = {}) {
    QuadResult out;
    QuadratureSpec seg_spec = spec;
    seg_spec.rel_tol = std::max(spec.rel_tol * 0.1, 1e-14);

    const bool logsub = spec.transform == QuadratureSpec::Transform::log_substitution;
    auto g = [&](double u) {
        if (!logsub) return f(u);
        const double eu = std::exp(u);
        return f(eu - 1.0) * eu;
    };

    double lo = 0.0, width = 1.0;
    int quiet = 0;
    for (int win = 0; win < 64; ++win) {
        const auto r = integrate_adaptive(g, lo, lo + width, seg_spec);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        lo += width;
        if (win >= 2) width *= 2.0;
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
        if (std::abs(r.value) < 0.25 * tol) {
            if (++quiet >= 3) {
                out.converged = out.error <= tol;
                return out;
            }
        } else {
            quiet = 0;
        }
    }
    out.converged = false;
    return out;
}

} // namespace isacnet
