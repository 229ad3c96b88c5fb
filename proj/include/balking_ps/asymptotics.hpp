#pragma once

// Closed-form asymptotic approximations to the conditional density p_n(t)
// and the stationary-arrival density, in three parameter regimes:
//
//  * fixed rho, t -> infinity with n/t held in various ranges (five cases,
//    separated by the saddle ratio 1 and the spectral-gap ratio
//    lam0 = 1 + nu_1, with erfc transition bands of width 3/sqrt(t));
//  * light traffic rho -> 0 on the time scales t ~ 1/rho, t ~ 1/sqrt(rho)
//    and t = O(1);
//  * heavy traffic rho -> infinity on the scales t ~ rho (Lambert-W outer
//    expansion) and t ~ 1/rho (Bessel-integral boundary layer).
//
// Each classifier returns the applicable case plus, near a case boundary,
// the neighbouring value and an ambiguity flag.

#include <cmath>
#include <string>

#include "balking_ps/common.hpp"
#include "balking_ps/quadrature.hpp"
#include "balking_ps/specfun.hpp"
#include "balking_ps/spectral.hpp"

namespace balking_ps {

// An asymptotic evaluation: the chosen regime's value, a short regime label,
// and (when the point sits within twice a classifier threshold) the
// neighbouring regime's value for comparison.
struct RegimeValue {
    double value = 0.0;
    std::string regime;
    double secondary = std::numeric_limits<double>::quiet_NaN();
    bool ambiguous = false;
};

// ---------------------------------------------------------------------------
// fixed rho, large t
// ---------------------------------------------------------------------------

// Scaled coordinates for the fixed-rho regime.  theta_s = n/t - 1 is the
// saddle location, theta_p = nu_1 the principal pole; the descent ridge sits
// between the ratios lam0 and 1.
struct FixedRhoCoords {
    int n = 0;
    double t = 0.0;
    double ratio = 0.0;    // n / t
    double delta = 0.0;    // (n/t - 1) sqrt(t)
    double lam0 = 0.0;     // 1 + nu_1
    double lam = 0.0;      // (n/t - lam0) sqrt(t)
    double r_star = 0.0;   // rho (t/n)^2 (n/t - 1), in (-1, 0) on the ridge
    double theta_s = 0.0;  // n/t - 1
    double theta_p = 0.0;  // nu_1
};

inline FixedRhoCoords fixed_rho_coords(double rho, int n, double t) {
    require(t > 0.0, "fixed_rho_coords: t must be > 0");
    require(n >= 0, "fixed_rho_coords: n must be >= 0");
    FixedRhoCoords c;
    c.n = n;
    c.t = t;
    c.ratio = n / t;
    c.lam0 = lambda0(rho);
    c.delta = (c.ratio - 1.0) * std::sqrt(t);
    c.lam = (c.ratio - c.lam0) * std::sqrt(t);
    c.theta_s = c.ratio - 1.0;
    c.theta_p = c.lam0 - 1.0;  // nu_1
    c.r_star = (n > 0) ? rho * (t / n) * (t / n) * (c.ratio - 1.0)
                       : -std::numeric_limits<double>::infinity();
    return c;
}

// Case index for the fixed-rho expansion: 1 ratio above the saddle, 2 saddle
// band, 3 descent ridge, 4 pole band, 5 below the spectral gap.
inline int classify_fixed_rho(double rho, int n, double t) {
    FixedRhoCoords c = fixed_rho_coords(rho, n, t);
    double bw = 3.0 / std::sqrt(t);
    double d_saddle = std::abs(c.ratio - 1.0);
    double d_pole = std::abs(c.ratio - c.lam0);
    if (d_saddle <= bw || d_pole <= bw) {
        if (d_saddle <= d_pole && n >= 1) return 2;
        return 4;
    }
    if (c.ratio > 1.0) return 1;
    if (c.ratio < c.lam0) return 5;
    return 3;
}

namespace detail {

inline double fixed_rho_case_value(double rho, int n, double t, int cse,
                                   const FixedRhoCoords& c) {
    switch (cse) {
        case 1:
            return 1.0 / n - rho / (n * (n - t)) + (rho - 1.0) / (n * static_cast<double>(n));
        case 2:
            return erfc(-c.delta / std::sqrt(2.0)) / (2.0 * n);
        case 3: {
            double r = c.r_star;
            double lg = log_gamma(r + 1.0) + r - 0.5 * std::log(2.0 * kPi) -
                        (r + 1.0) * std::log(1.0 - c.ratio) +
                        (-1.5 - rho * t / n + rho * (t / n) * (t / n)) * std::log(n) +
                        n * std::log(t / n) + (n - t);
            return std::exp(lg);
        }
        case 4: {
            double pre = (std::sqrt(rho + 4.0) - std::sqrt(rho)) /
                         (4.0 * std::sqrt(rho + 4.0));
            double lg = -1.0 - n * std::log(c.lam0) + (c.lam0 - 1.0) * t;
            return pre * std::exp(lg) * erfc(c.lam / std::sqrt(2.0 * c.lam0));
        }
        case 5: {
            double pre = (std::sqrt(rho + 4.0) - std::sqrt(rho)) /
                         (2.0 * std::sqrt(rho + 4.0));
            double lg = -1.0 - n * std::log(c.lam0) + (c.lam0 - 1.0) * t;
            return pre * std::exp(lg);
        }
    }
    throw domain_error("fixed_rho_case_value: unknown case");
}

}  // namespace detail

// Fixed-rho large-t approximation with transition-band handling.  When the
// ratio n/t falls within twice a band half-width of a neighbouring case, the
// neighbour's value is reported as `secondary` and `ambiguous` is set.
inline RegimeValue approx_fixed_rho(const ModelParams& params, int n, double t) {
    params.validate();
    FixedRhoCoords c = fixed_rho_coords(params.rho, n, t);
    int cse = classify_fixed_rho(params.rho, n, t);
    RegimeValue rv;
    rv.regime = "fixed-rho-" + std::to_string(cse);
    rv.value = detail::fixed_rho_case_value(params.rho, n, t, cse, c);

    double bw = 3.0 / std::sqrt(t);
    double d_saddle = std::abs(c.ratio - 1.0);
    double d_pole = std::abs(c.ratio - c.lam0);
    int neighbour = 0;
    if (cse == 2 && d_pole <= 2.0 * bw) neighbour = 4;
    else if (cse == 4 && d_saddle <= 2.0 * bw && n >= 1) neighbour = 2;
    else if ((cse == 1 || cse == 3) && d_saddle <= 2.0 * bw && n >= 1) neighbour = 2;
    else if ((cse == 3 || cse == 5) && d_pole <= 2.0 * bw) neighbour = 4;
    if (neighbour != 0) {
        rv.secondary = detail::fixed_rho_case_value(params.rho, n, t, neighbour, c);
        rv.ambiguous = true;
    }
    return rv;
}

// ---------------------------------------------------------------------------
// light traffic, rho -> 0
// ---------------------------------------------------------------------------

// Scaled coordinates for the light-traffic regime.
struct LightTrafficCoords {
    double zeta = 0.0;       // rho t      (slow time)
    double omega_big = 0.0;  // (rho n - rho t) / sqrt(rho)
    double x_cap = 0.0;      // sqrt(rho) n
    double y_cap = 0.0;      // (sqrt(rho) n - rho t) / rho^{1/4}
    double omega = 0.0;      // sqrt(rho) t  (fast time)
};

inline LightTrafficCoords light_coords(double rho, int n, double t) {
    require(rho > 0.0, "light_coords: rho must be > 0");
    LightTrafficCoords c;
    c.zeta = rho * t;
    c.omega = std::sqrt(rho) * t;
    c.x_cap = std::sqrt(rho) * n;
    c.omega_big = (rho * n - c.zeta) / std::sqrt(rho);
    c.y_cap = (c.x_cap - c.zeta) / std::pow(rho, 0.25);
    return c;
}

// Zeroth-order small-rho density at fixed (n, t):
//   p^(0)_n(t) = e^{-t}/(n+1) sum_{l<=n} t^l / l!.
inline double light_p0(int n, double t) {
    require(n >= 0 && t >= 0.0, "light_p0: bad arguments");
    double term = 1.0, sum = 1.0;
    for (int l = 1; l <= n; ++l) {
        term *= t / l;
        sum += term;
    }
    return std::exp(-t) * sum / (n + 1.0);
}

// First-order small-rho correction at fixed (n, t):
//   p^(1)_n(t) = e^{-t}/(n+1) [ t^{n+2}/(n+2)! sum_{l<=n} 1/(l+2)
//              + sum_{l=1}^{n+1} t^l/l! (1/(n+2) - 1/(n+2-l)) ].
inline double light_p1(int n, double t) {
    require(n >= 0 && t >= 0.0, "light_p1: bad arguments");
    double s1 = 0.0;
    for (int l = 0; l <= n; ++l) s1 += 1.0 / (l + 2.0);
    double lead = std::exp((n + 2.0) * std::log(t) - log_gamma(n + 3.0)) * s1;
    if (t == 0.0) lead = 0.0;
    double term = 1.0, s2 = 0.0;
    for (int l = 1; l <= n + 1; ++l) {
        term *= t / l;
        s2 += term * (1.0 / (n + 2.0) - 1.0 / (n + 2.0 - l));
    }
    return std::exp(-t) * (lead + s2) / (n + 1.0);
}

// Parity-split spectral sum for the light-traffic fast time scale:
//   Q_n(omega) = sum_m (w_m/2) psi_m(n) [e^{omega/sqrt m} + (-1)^n e^{-omega/sqrt m}],
// where w_m = m^{m-1} e^{-m} / m! and psi_m solves
// psi(k+1) = (k+1) psi(k)/sqrt(m) - k psi(k-1), psi(0)=1, psi(1)=1/sqrt(m).
inline double light_qn(int n, double omega) {
    require(n >= 0, "light_qn: n must be >= 0");
    require(omega >= 0.0, "light_qn: omega must be >= 0");
    auto term_at = [&](double m) {
        double w = std::exp(log_series_weight(m));
        double sq = std::sqrt(m);
        double prev = 1.0, cur = 1.0 / sq;
        if (n == 0) cur = 1.0;
        else
            for (int k = 1; k < n; ++k) {
                double nxt = (k + 1.0) * cur / sq - k * prev;
                prev = cur;
                cur = nxt;
            }
        double even = std::exp(omega / sq);
        double odd = std::exp(-omega / sq);
        double par = (n % 2 == 0) ? even + odd : even - odd;
        return 0.5 * w * cur * par;
    };
    return detail::sum_with_em_tail(term_at, 1e-10, 2'000'000, 16).value;
}

// Light-traffic approximation with the three-scale classifier (slow scale
// zeta = rho t, fast scale omega = sqrt(rho) t, fixed scale) and the
// within-scale case split.  Secondary values are reported near thresholds.
inline RegimeValue approx_light_traffic(const ModelParams& params, int n, double t) {
    params.validate();
    require(n >= 0 && t >= 0.0, "approx_light_traffic: bad arguments");
    const double rho = params.rho;
    LightTrafficCoords c = light_coords(rho, n, t);

    auto case1 = [&]() -> RegimeValue {
        RegimeValue rv;
        double x = rho * n;
        double zeta = c.zeta;
        double bw_x = 3.0 * std::sqrt(rho) * std::sqrt(std::max(x, zeta));
        if (n >= 1 && std::abs(x - zeta) <= bw_x) {
            double om = (x - zeta) / std::sqrt(rho);
            rv.regime = "light-1b";
            rv.value = erfc(-om / std::sqrt(2.0 * std::max(x, 1e-300))) / (2.0 * n);
            return rv;
        }
        if (n >= 1 && x > zeta) {
            rv.regime = "light-1a";
            rv.value = 1.0 / n;
            return rv;
        }
        // x < zeta from here on
        if (x >= 0.5 * zeta && n >= 1) {
            rv.regime = "light-1c";
            double lg = (x - zeta + x * std::log(zeta / x)) / rho;
            rv.value = std::pow(rho, 1.5) * zeta /
                       (std::sqrt(2.0 * kPi) * (zeta - x)) * std::pow(x, -1.5) *
                       std::exp(lg);
            return rv;
        }
        double X = c.x_cap;
        double bw_X = 3.0 * std::pow(rho, 0.25) * std::sqrt(zeta);
        if (n >= 1 && std::abs(X - zeta) <= bw_X) {
            double Y = (X - zeta) / std::pow(rho, 0.25);
            rv.regime = "light-1e";
            rv.value = std::exp(-1.0 - 0.5 * n * std::log(rho) -
                                (1.0 - std::sqrt(rho)) * t) *
                       erfc(Y / std::sqrt(2.0 * zeta)) / 4.0;
            return rv;
        }
        if (n >= 1 && X > zeta) {
            double q = (zeta / X) * (zeta / X);
            rv.regime = "light-1d";
            double lg = log_gamma(1.0 - q) - q + (-1.5 + q) * std::log(n) +
                        n * std::log(t / n) + (n - t) - 0.5 * std::log(2.0 * kPi);
            rv.value = std::exp(lg);
            return rv;
        }
        if (X >= 0.1 * zeta && n >= 1) {
            rv.regime = "light-1f";
            rv.value = std::exp(-1.0 - 0.5 * n * std::log(rho) + 0.5 * X -
                                0.5 * zeta - (1.0 - std::sqrt(rho)) * t) / 2.0;
            return rv;
        }
        rv.regime = "light-1g";
        rv.value = std::exp(-1.0 - 0.5 * n * std::log(rho) - 0.5 * zeta -
                            (1.0 - std::sqrt(rho)) * t) / 2.0;
        return rv;
    };
    auto case2 = [&]() -> RegimeValue {
        RegimeValue rv;
        rv.regime = "light-2";
        rv.value = std::exp(-t - 0.5 * n * std::log(rho)) * light_qn(n, c.omega);
        return rv;
    };
    auto case3 = [&]() -> RegimeValue {
        RegimeValue rv;
        rv.regime = "light-3";
        rv.value = light_p0(n, t) + rho * light_p1(n, t);
        return rv;
    };

    RegimeValue rv;
    if (c.zeta >= 0.1) {
        rv = case1();
        if (c.zeta <= 0.2) {
            rv.secondary = case2().value;
            rv.ambiguous = true;
        }
    } else if (c.omega >= 0.1) {
        rv = case2();
        if (c.zeta >= 0.05) {
            rv.secondary = case1().value;
            rv.ambiguous = true;
        } else if (c.omega <= 0.2) {
            rv.secondary = case3().value;
            rv.ambiguous = true;
        }
    } else {
        rv = case3();
        if (c.omega >= 0.05) {
            rv.secondary = case2().value;
            rv.ambiguous = true;
        }
    }
    return rv;
}

// ---------------------------------------------------------------------------
// heavy traffic, rho -> infinity
// ---------------------------------------------------------------------------

// Outer-expansion shift U(N, T), the solution of U/(N-1) = 1 - e^{U-T}
// (equivalently U = N - 1 - W0((N-1) e^{N-T-1})), with U(N,0) = 0 and
// U(1,T) = 0.
inline double solve_U(double N, double T) {
    require(N >= 0.0 && T >= 0.0, "solve_U: N and T must be >= 0");
    double U = N - 1.0 - lambert_w0((N - 1.0) * std::exp(N - T - 1.0));
    if (N != 1.0) {
        double resid = U / (N - 1.0) - (1.0 - std::exp(U - T));
        require(std::abs(resid) <= 1e-10, "solve_U: implicit equation violated");
    }
    return U;
}

// The same shift by its tree-function series
//   U = N - 1 + sum_m (m^{m-1}/m!) z^m,  z = (1-N) e^{N-T-1},
// convergent while |1-N| e^{N-T} < 1.
inline double u_series(double N, double T) {
    require(N >= 0.0 && T >= 0.0, "u_series: N and T must be >= 0");
    double z = (1.0 - N) * std::exp(N - T - 1.0);
    require(std::abs(z) < std::exp(-1.0),
            "u_series: outside the convergence domain |1-N| e^{N-T} < 1");
    double lz = std::log(std::abs(z));
    double sgn = (z < 0.0) ? -1.0 : 1.0;
    KahanSum acc;
    acc.add(N - 1.0);
    double s = 1.0;
    for (int m = 1; m <= 1000; ++m) {
        s *= sgn;
        double term = s * std::exp((m - 1.0) * std::log(static_cast<double>(m)) -
                                   log_gamma(m + 1.0) + m * lz);
        acc.add(term);
        if (std::abs(term) < 1e-16 * (std::abs(acc.value()) + 1e-30)) return acc.value();
    }
    throw convergence_error("u_series: series stalled near the convergence boundary",
                            acc.value(), 0.0);
}

// Scaled coordinates for the heavy-traffic regime.
struct HeavyTrafficCoords {
    double n_cap = 0.0;   // N = n / rho
    double t_cap = 0.0;   // T = t / rho
    double tau = 0.0;     // rho t (boundary-layer time)
    double u = 0.0;       // U(N, T)
    double xi = 0.0;      // N - U
    double eta = 0.0;     // U
    double n_star = 0.0;  // N - U
};

inline HeavyTrafficCoords heavy_coords(double rho, int n, double t) {
    require(rho > 0.0, "heavy_coords: rho must be > 0");
    HeavyTrafficCoords c;
    c.n_cap = n / rho;
    c.t_cap = t / rho;
    c.tau = rho * t;
    c.u = solve_U(c.n_cap, c.t_cap);
    c.xi = c.n_cap - c.u;
    c.eta = c.u;
    c.n_star = c.xi;
    return c;
}

// Leading heavy-traffic density coefficient P0(N, T) = e^{U-T} / (N - U);
// P0(N, 0) = 1/N and P0(1, T) = e^{-T}.
inline double heavy_p0(double N, double T) {
    double U = solve_U(N, T);
    return std::exp(U - T) / (N - U);
}

// First heavy-traffic correction P1(N, T).  Away from N = 1 it is the
// rational-log expression in xi = N - U below; within |N-1| < 1e-4 the
// closed-form N = 1 slice (2T - 9/2) e^{-T} + 8 e^{-2T} - (9/2) e^{-3T} is
// used instead (the direct expression degenerates to 0/0 there).
inline double heavy_p1(double N, double T) {
    require(N >= 0.0 && T >= 0.0, "heavy_p1: N and T must be >= 0");
    if (std::abs(N - 1.0) < 1e-4) {
        return (2.0 * T - 4.5) * std::exp(-T) + 8.0 * std::exp(-2.0 * T) -
               4.5 * std::exp(-3.0 * T);
    }
    double U = solve_U(N, T);
    double xi = N - U;
    double d = N - 1.0;  // = xi + eta - 1
    double xi5 = std::pow(xi, 5);
    double xm = xi - 1.0;
    return -xm * (2.0 * xi - 3.0) / (2.0 * xi5) +
           3.0 * xm * (2.0 * xi * xi - 2.0 * xi - 3.0) / (2.0 * xi5 * d) -
           xm * xm * (2.0 * xi * xi * xi + 2.0 * xi * xi - 5.0 * xi - 15.0) /
               (2.0 * xi5 * d * d) -
           xm * xm * xm * (2.0 * xi * xi + 4.0 * xi + 3.0) / (2.0 * xi5 * d * d * d) -
           2.0 * xm * (2.0 * xi - 3.0) / (xi5 * d) * std::log(std::abs(d / xm));
}

// Two-term heavy-traffic density rho^{-1} P0 + rho^{-2} P1 at (n, t).
inline double heavy_density(const ModelParams& params, int n, double t) {
    params.validate();
    require(n >= 0 && t >= 0.0, "heavy_density: bad arguments");
    double N = n / params.rho;
    double T = t / params.rho;
    return heavy_p0(N, T) / params.rho + heavy_p1(N, T) / (params.rho * params.rho);
}

// Boundary-layer profile for short heavy-traffic times t = tau / rho:
//   Q_n(tau) = integral_0^1 (1-xi)^n J0(2 sqrt(tau (-xi - log(1-xi)))) dxi,
// by dyadic panels refined toward xi = 1 until a panel contributes < 1e-12.
inline double heavy_qn(int n, double tau) {
    require(n >= 0, "heavy_qn: n must be >= 0");
    require(tau >= 0.0, "heavy_qn: tau must be >= 0");
    auto arg = [](double xi) {
        // -xi - log(1-xi), via its series below 1e-4 to dodge cancellation
        if (xi < 1e-4) return xi * xi * (0.5 + xi / 3.0 + xi * xi * 0.25);
        return -xi - std::log1p(-xi);
    };
    auto f = [&](double xi) {
        return std::pow(1.0 - xi, n) * bessel_j0(2.0 * std::sqrt(tau * arg(xi)));
    };
    KahanSum acc;
    double lo = 0.0;
    double width = 0.5;
    for (int k = 0; k < 60; ++k) {
        double hi = lo + width;
        double piece = gauss_legendre(f, lo, hi, 24);
        acc.add(piece);
        if (std::abs(piece) < 1e-12 * std::max(std::abs(acc.value()), 1e-30) &&
            k >= 3)
            break;
        lo = hi;
        width *= 0.5;
    }
    return acc.value();
}

// Queue-scale threshold N_c = 1 + W0(1/e): for N above it the series form of
// U converges for all T.
inline double heavy_critical_n() {
    return 1.0 + lambert_w0(std::exp(-1.0));
}

// ---------------------------------------------------------------------------
// stationary-arrival (unconditional) asymptotics
// ---------------------------------------------------------------------------

// Asymptotic stationary-arrival density with the rho-based classifier:
// heavy scale for rho >= 10, light scales for rho <= 0.1, and the fixed-rho
// exponential tail law otherwise.
inline RegimeValue approx_unconditional(const ModelParams& params, double t) {
    params.validate();
    require(t >= 0.0, "approx_unconditional: t must be >= 0");
    const double rho = params.rho;

    auto heavy = [&]() -> RegimeValue {
        RegimeValue rv;
        rv.regime = "uncond-heavy";
        rv.value = std::exp(-t / rho) / rho;
        return rv;
    };
    auto fixed = [&]() -> RegimeValue {
        RegimeValue rv;
        rv.regime = "uncond-fixed";
        double l0 = lambda0(rho);
        double pre = (std::sqrt(rho + 4.0) - std::sqrt(rho)) /
                     (2.0 * std::sqrt(rho + 4.0));
        rv.value = pre * std::exp(-1.0 - rho + rho / l0 + (l0 - 1.0) * t);
        return rv;
    };
    auto light = [&]() -> RegimeValue {
        RegimeValue rv;
        double zeta = rho * t;
        double omega = std::sqrt(rho) * t;
        if (zeta >= 0.5) {
            rv.regime = "uncond-light-a";
            rv.value = 0.5 * std::exp(-1.0 - 0.5 * zeta - (1.0 - std::sqrt(rho)) * t);
        } else if (omega >= 0.5) {
            rv.regime = "uncond-light-b";
            rv.value = std::exp(-t) * light_qn(0, omega);
        } else {
            rv.regime = "uncond-light-c";
            rv.value = std::exp(-t) * (1.0 + rho * (t * t - 2.0) / 4.0);
        }
        return rv;
    };

    RegimeValue rv;
    if (rho >= 10.0) {
        rv = heavy();
        if (rho <= 20.0) {
            rv.secondary = fixed().value;
            rv.ambiguous = true;
        }
    } else if (rho <= 0.1) {
        rv = light();
        if (rho >= 0.05) {
            rv.secondary = fixed().value;
            rv.ambiguous = true;
        }
    } else {
        rv = fixed();
        if (rho >= 5.0) {
            rv.secondary = heavy().value;
            rv.ambiguous = true;
        } else if (rho <= 0.2) {
            rv.secondary = light().value;
            rv.ambiguous = true;
        }
    }
    return rv;
}

}  // namespace balking_ps
