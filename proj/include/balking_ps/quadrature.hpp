#pragma once

// Quadrature building blocks: fixed-order Gauss-Legendre rules (nodes found
// by Newton iteration and cached per order) and a globally adaptive
// Gauss-Kronrod 7/15 integrator with bisection of the worst segment.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "balking_ps/common.hpp"

namespace balking_ps {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    int evals = 0;
};

// ---------------------------------------------------------------------------
// Gauss-Legendre
// ---------------------------------------------------------------------------

struct GLRule {
    std::vector<double> nodes;    // on (-1, 1), ascending
    std::vector<double> weights;
};

namespace detail {

inline GLRule make_gauss_legendre(int n) {
    require(n >= 1 && n <= 4096, "gauss_legendre: order out of range");
    GLRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like first guess, then Newton on P_n(x)
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pd = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p1 = x; }
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            double pm = (n == 1) ? 1.0 : p0;
            pd = n * (x * pn - pm) / (x * x - 1.0);
            double dx = pn / pd;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pd * pd);
    }
    return rule;
}

}  // namespace detail

// Cached rule lookup; safe for concurrent use.
inline const GLRule& gauss_legendre_rule(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GLRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GLRule>(detail::make_gauss_legendre(n));
    return *slot;
}

template <class F>
double gauss_legendre(F&& f, double a, double b, int n) {
    const GLRule& rule = gauss_legendre_rule(n);
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    KahanSum acc;
    for (int i = 0; i < n; ++i)
        acc.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
    return half * acc.value();
}

// ---------------------------------------------------------------------------
// adaptive Gauss-Kronrod 7/15
// ---------------------------------------------------------------------------

namespace detail {

// Classical 15-point Kronrod extension of 7-point Gauss (symmetric halves).
inline constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
inline constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gauss7_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
inline std::pair<double, double> gk15(F& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fk = f(mid);
    double k15 = kronrod_w[7] * fk;
    double g7 = gauss7_w[3] * fk;
    for (int i = 0; i < 7; ++i) {
        double lo = f(mid - half * kronrod_x[i]);
        double hi = f(mid + half * kronrod_x[i]);
        k15 += kronrod_w[i] * (lo + hi);
        if (i % 2 == 1) g7 += gauss7_w[i / 2] * (lo + hi);
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::abs(k15 - g7)};
}

}  // namespace detail

// Globally adaptive integration over a finite interval: repeatedly bisect the
// segment with the largest Kronrod-Gauss discrepancy.  Throws
// convergence_error when the segment budget is exhausted.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double tol,
                              int max_segments = 4000) {
    require(std::isfinite(a) && std::isfinite(b), "integrate_adaptive: bad interval");
    require(tol > 0.0, "integrate_adaptive: tol must be positive");
    struct Seg { double a, b, value, err; };
    std::vector<Seg> segs;
    auto eval = [&](double lo, double hi) {
        auto [v, e] = detail::gk15(f, lo, hi);
        return Seg{lo, hi, v, e};
    };
    segs.push_back(eval(a, b));
    QuadResult out;
    out.evals = 15;
    for (;;) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        if (err <= tol * std::max(std::abs(total), 1e-300) || err == 0.0) {
            out.value = total;
            out.err_est = err;
            return out;
        }
        if (static_cast<int>(segs.size()) >= max_segments)
            throw convergence_error("integrate_adaptive: segment budget exhausted",
                                    total, err);
        Seg s = segs[worst];
        double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {  // interval too thin to split
            out.value = total;
            out.err_est = err;
            return out;
        }
        segs[worst] = eval(s.a, mid);
        segs.push_back(eval(mid, s.b));
        out.evals += 30;
    }
}

}  // namespace balking_ps
