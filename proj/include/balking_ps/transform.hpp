#pragma once

// Laplace transform of the conditional sojourn density on the real axis
// theta > nu_1, via the integral representation
//
//   phat_n(theta) = M [ G_n sum_{l<=n} rho^l H_l / l!
//                     + H_n sum_{l>n} rho^l G_l / l! ],
//
// where with a = 1/(1+theta) and r = rho theta / (1+theta)^2:
//
//   G_n = integral_0^a z^n (a-z)^r e^{-rho z/(1+theta)} dz,
//   H_n = integral_a^inf z^n (z-a)^r e^{-rho z/(1+theta)} dz,
//   M   = rho^{r+1} e^{rho/(1+theta)^2} / ((1+theta) Gamma(r+1)).
//
// The independent route to the same quantity is the eigenvalue-pair series
// with spectral weight 1/(theta - nu) (pole sum); the two cross-validate.

#include <cmath>
#include <vector>

#include "balking_ps/common.hpp"
#include "balking_ps/quadrature.hpp"
#include "balking_ps/specfun.hpp"
#include "balking_ps/spectral.hpp"

namespace balking_ps {

// Exponent r = rho theta / (1+theta)^2; r/theta is computed as
// rho/(1+theta)^2 wherever the ratio itself is needed.
inline double transform_r(double rho, double theta) {
    return rho * theta / ((1.0 + theta) * (1.0 + theta));
}

// Transform-domain bookkeeping for one (rho, theta).
struct TransformPoint {
    double theta = 0.0;
    double r = 0.0;
    double m_factor = 0.0;  // the prefactor M above
    double value = 0.0;     // phat_n(theta) when produced by laplace_transform
};

namespace detail {

inline void check_theta(double rho, double theta) {
    EigenPair e1 = eigenvalues(rho, 1.0);
    require(theta > e1.nu + 1e-12,
            "transform: theta must exceed the principal eigenvalue");
}

// integral_0^c y^r f(y) dy for r in (-1, 0), by the substitution w = y^{1+r}
// which removes the endpoint singularity exactly:  y^r dy = dw / (1+r).
template <class F>
double singular_endpoint_integral(F&& f, double c, double r, double tol) {
    double p = 1.0 + r;
    auto g = [&](double w) { return f(std::pow(w, 1.0 / p)); };
    return integrate_adaptive(g, 0.0, std::pow(c, p), tol).value / p;
}

}  // namespace detail

// G_n(theta) = integral over (0, a) of z^n (a-z)^r e^{-rho z/(1+theta)}.
inline double g_integral(const ModelParams& params, double theta, int n) {
    params.validate();
    require(n >= 0, "g_integral: n must be >= 0");
    detail::check_theta(params.rho, theta);
    const double rho = params.rho;
    const double a = 1.0 / (1.0 + theta);
    const double r = transform_r(rho, theta);
    const double tol = std::min(params.tol, 1e-12);
    // integrate in y = a - z so the algebraic factor sits at the origin
    auto f = [&](double y) {
        return std::pow(a - y, n) * std::exp(-rho * (a - y) / (1.0 + theta));
    };
    if (r < 0.0)
        return detail::singular_endpoint_integral(
            [&](double y) { return f(y); }, a, r, tol);
    auto direct = [&](double y) { return std::pow(y, r) * f(y); };
    return integrate_adaptive(direct, 0.0, a, tol).value;
}

// H_n(theta) = integral over (a, inf) of z^n (z-a)^r e^{-rho z/(1+theta)},
// truncated where the log-integrand has fallen 40 nats below its peak; the
// discarded remainder is certified small by integrating one octave past the
// cut.
inline double h_integral(const ModelParams& params, double theta, int n) {
    params.validate();
    require(n >= 0, "h_integral: n must be >= 0");
    detail::check_theta(params.rho, theta);
    const double rho = params.rho;
    const double a = 1.0 / (1.0 + theta);
    const double r = transform_r(rho, theta);
    const double tol = std::min(params.tol, 1e-12);
    const double rate = rho / (1.0 + theta);

    // peak of z^n (z-a)^r e^{-rate z} for z > a, then walk out 40 nats
    auto log_body = [&](double z) {
        return n * std::log(z) + r * std::log(z - a) - rate * z;
    };
    double z_pk = std::max((n + r) / rate + a, a + 0.5 / rate);
    double peak_log = log_body(z_pk);
    double z_cut = z_pk;
    while (log_body(z_cut) > peak_log - 40.0) z_cut *= 2.0;

    auto f = [&](double u) {  // u = z - a
        return std::pow(u + a, n) * std::exp(-rate * (u + a));
    };
    double head;
    double split = std::min(1.0, 0.5 * (z_cut - a));
    if (r < 0.0) {
        head = detail::singular_endpoint_integral(f, split, r, tol);
    } else {
        auto direct = [&](double u) { return std::pow(u, r) * f(u); };
        head = integrate_adaptive(direct, 0.0, split, tol).value;
    }
    auto body = [&](double u) { return std::pow(u, r) * f(u); };
    double mid = integrate_adaptive(body, split, z_cut - a, tol).value;
    double value = head + mid;
    double cert = integrate_adaptive(body, z_cut - a, 2.0 * (z_cut - a), tol).value;
    if (!(std::abs(cert) <= 100.0 * tol * std::abs(value)))
        throw convergence_error("h_integral: truncation not certified",
                                value, std::abs(cert));
    return value;
}

// Prefactor M(theta) and exponent bookkeeping.
inline TransformPoint transform_point(const ModelParams& params, double theta) {
    params.validate();
    detail::check_theta(params.rho, theta);
    TransformPoint tp;
    tp.theta = theta;
    tp.r = transform_r(params.rho, theta);
    double one_plus = 1.0 + theta;
    tp.m_factor = std::exp((tp.r + 1.0) * std::log(params.rho) +
                           params.rho / (one_plus * one_plus) -
                           std::log(one_plus) - log_gamma(tp.r + 1.0));
    return tp;
}

// Laplace transform phat_n(theta) by the integral representation.
inline TransformPoint laplace_transform(const ModelParams& params, double theta,
                                        int n) {
    params.validate();
    require(n >= 0, "laplace_transform: n must be >= 0");
    TransformPoint tp = transform_point(params, theta);
    const double rho = params.rho;

    double s_low = 0.0;   // sum_{l<=n} rho^l H_l / l!
    double w = 1.0;       // rho^l / l!
    for (int l = 0; l <= n; ++l) {
        s_low += w * h_integral(params, theta, l);
        w *= rho / (l + 1.0);
    }
    double s_high = 0.0;  // sum_{l>n} rho^l G_l / l!, superexponentially convergent
    for (int l = n + 1; ; ++l) {
        double term = w * g_integral(params, theta, l);
        s_high += term;
        w *= rho / (l + 1.0);
        if (std::abs(term) <= 1e-16 * (std::abs(s_high) + 1e-300) && l > n + 3) break;
        if (l > n + 400)
            throw convergence_error("laplace_transform: series stalled", s_high, term);
    }
    tp.value = tp.m_factor * (g_integral(params, theta, n) * s_low +
                              h_integral(params, theta, n) * s_high);
    return tp;
}

// The same transform from the spectral side: sum over eigenvalue pairs of
// C phi / (theta - nu).
inline double pole_sum_transform(const ModelParams& params, double theta, int n) {
    detail::check_theta(params.rho, theta);
    auto g = [theta](auto nu) { return 1.0 / (theta - nu); };
    return pair_series(params, n, 0.0, g).value;
}

// Cross-identity of the two fundamental integrals:
//   G_l H_{l+1} - G_{l+1} H_l = l! / (rho^l K),
// with K = rho^{r+2} e^{rho/(1+theta)^2} / (Gamma(r+1)(1+theta)).  Returns
// the relative residual.
inline double wronskian_check(const ModelParams& params, double theta, int l) {
    params.validate();
    require(l >= 0, "wronskian_check: l must be >= 0");
    const double rho = params.rho;
    double r = transform_r(rho, theta);
    double one_plus = 1.0 + theta;
    double K = std::exp((r + 2.0) * std::log(rho) + rho / (one_plus * one_plus) -
                        std::log(one_plus) - log_gamma(r + 1.0));
    double lhs = g_integral(params, theta, l) * h_integral(params, theta, l + 1) -
                 g_integral(params, theta, l + 1) * h_integral(params, theta, l);
    double rhs = std::exp(log_gamma(l + 1.0) - l * std::log(rho)) / K;
    return std::abs(lhs - rhs) / std::abs(rhs);
}

// Three-term recurrence satisfied by the transform in n:
//   rho phat_{n+1} - [(n+1)(theta+1) + rho] phat_n + n phat_{n-1} = -1.
// Returns the residual scaled by the largest participating magnitude.
inline double transform_recurrence_residual(const ModelParams& params, double theta,
                                            int n) {
    require(n >= 1, "transform_recurrence_residual: n must be >= 1");
    double pm = laplace_transform(params, theta, n - 1).value;
    double p0 = laplace_transform(params, theta, n).value;
    double pp = laplace_transform(params, theta, n + 1).value;
    const double rho = params.rho;
    double lhs = rho * pp - ((n + 1.0) * (theta + 1.0) + rho) * p0 + n * pm;
    double scale = std::max({std::abs(rho * pp),
                             std::abs(((n + 1.0) * (theta + 1.0) + rho) * p0),
                             std::abs(n * pm), 1.0});
    return std::abs(lhs + 1.0) / scale;
}

}  // namespace balking_ps
