#pragma once

// Self-contained special functions used throughout the library:
// complementary error function, Bessel J0, log-gamma, and the principal
// Lambert W branch.  Each is accurate to ~1e-12 relative (or better) on its
// domain, with the series/asymptotic switch points documented inline.

#include <cmath>
#include <limits>

#include "balking_ps/common.hpp"

namespace balking_ps {

// ---------------------------------------------------------------------------
// erfc
// ---------------------------------------------------------------------------

namespace detail {

// erf by its alternating Maclaurin series; used for |x| <= 1 where it needs
// at most ~22 terms and suffers no cancellation worth mentioning.
inline double erf_series(double x) {
    const double inv_sqrt_pi = 0.56418958354775628694807945156077;
    double x2 = x * x;
    double term = x;           // x^(2k+1) * (-1)^k / k!
    double sum = x;            // running sum of term / (2k+1)
    for (int k = 1; k <= 40; ++k) {
        term *= -x2 / k;
        double contrib = term / (2 * k + 1);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 * inv_sqrt_pi * sum;
}

// Scaled complement erfcx(x) = e^{x^2} erfc(x) for x >= 1, by the classical
// continued fraction  sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + ...)))
// evaluated with the modified Lentz algorithm.
inline double erfcx_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k <= 500; ++k) {
        double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        d = 1.0 / d;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    const double sqrt_pi = 1.7724538509055160272981674833411452;
    return 1.0 / (sqrt_pi * f);
}

// exp(-x^2) with the argument squared in double-double pieces (Dekker split)
// so the result keeps full relative accuracy even when x^2 is large.
inline double exp_neg_square(double x) {
    double t = 134217729.0 * x;  // 2^27 + 1
    double xh = t - (t - x);
    double xl = x - xh;
    return std::exp(-xh * xh) * std::exp(-(x + xh) * xl);
}

}  // namespace detail

// Complementary error function.  Series for |x| <= 1; for x > 1 the
// continued-fraction erfcx times a split-argument exp(-x^2); reflection
// erfc(x) = 2 - erfc(-x) for x < -1.
inline double erfc(double x) {
    require(!std::isnan(x), "erfc: NaN argument");
    if (x > 1.0) return detail::erfcx_cf(x) * detail::exp_neg_square(x);
    if (x < -1.0) return 2.0 - detail::erfcx_cf(-x) * detail::exp_neg_square(x);
    return 1.0 - detail::erf_series(x);
}

// Scaled complement e^{x^2} erfc(x); useful when erfc underflows.
inline double erfcx(double x) {
    require(!std::isnan(x), "erfcx: NaN argument");
    if (x > 1.0) return detail::erfcx_cf(x);
    double x2 = x * x;
    if (x < -1.0) {
        // 2 e^{x^2} - erfcx(-x); fine until e^{x^2} overflows (|x| ~ 26.6)
        return 2.0 * std::exp(x2) - detail::erfcx_cf(-x);
    }
    return std::exp(x2) * (1.0 - detail::erf_series(x));
}

// ---------------------------------------------------------------------------
// Bessel J0
// ---------------------------------------------------------------------------

// J0 by its Maclaurin series for |x| <= 8 and by the N-panel trapezoid rule on
// (1/pi) * integral of cos(x sin phi) over [0, pi] beyond.  The trapezoid sum
// equals J0(x) + 2 J_{2N}(x) + 2 J_{4N}(x) + ..., so N = ceil(x) + 25 panels
// leave an error far below 1e-15.
inline double bessel_j0(double x) {
    require(!std::isnan(x), "bessel_j0: NaN argument");
    x = std::abs(x);
    if (x <= 8.0) {
        double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    int n = static_cast<int>(std::ceil(x)) + 25;
    double h = kPi / n;
    // endpoints contribute cos(0)/2 + cos(x sin pi)/2 = 1; interior nodes full
    KahanSum acc;
    acc.add(1.0);
    for (int k = 1; k < n; ++k) acc.add(std::cos(x * std::sin(h * k)));
    return acc.value() / n;
}

// ---------------------------------------------------------------------------
// log-gamma
// ---------------------------------------------------------------------------

// log Gamma(x) for x > 0: Stirling's expansion with Bernoulli terms through
// x^{-13} for x >= 10, and the recurrence shift lgamma(x) =
// lgamma(x + k) - sum log(x + i) below.
inline double log_gamma(double x) {
    require(!std::isnan(x), "log_gamma: NaN argument");
    require(x > 0.0, "log_gamma: argument must be positive");
    double shift = 0.0;
    while (x < 10.0) {
        shift += std::log(x);
        x += 1.0;
    }
    const double half_log_two_pi = 0.91893853320467274178032973640562;
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // Bernoulli coefficients B_{2k} / (2k (2k-1))
    double series = inv * (1.0 / 12
        + inv2 * (-1.0 / 360
        + inv2 * (1.0 / 1260
        + inv2 * (-1.0 / 1680
        + inv2 * (1.0 / 1188
        + inv2 * (-691.0 / 360360
        + inv2 * (1.0 / 156)))))));
    return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

// ---------------------------------------------------------------------------
// eigenvalue-pair series weight
// ---------------------------------------------------------------------------

// log of w_m = m^{m-1} e^{-m} / m! for real m >= 1, the coefficient scale of
// every eigenvalue-pair series in the library.  Written literally, the three
// Stirling-sized pieces grow like m log m while their sum stays O(log m), so
// beyond m ~ 1e8 the rounding of the big pieces wrecks the result (and the
// series tail completion evaluates m up to ~1e12).  For m >= 12 the
// cancellation is therefore done analytically:
//   log w_m = -(3/2) log m - log sqrt(2 pi) - S(m),
// with S(m) the Stirling correction series of log Gamma.
inline double log_series_weight(double m) {
    require(m >= 1.0, "log_series_weight: m must be >= 1");
    if (m < 12.0) return (m - 1.0) * std::log(m) - m - log_gamma(m + 1.0);
    const double half_log_two_pi = 0.91893853320467274178032973640562;
    double inv = 1.0 / m;
    double inv2 = inv * inv;
    double series = inv * (1.0 / 12
        + inv2 * (-1.0 / 360
        + inv2 * (1.0 / 1260
        + inv2 * (-1.0 / 1680
        + inv2 * (1.0 / 1188)))));
    return -1.5 * std::log(m) - half_log_two_pi - series;
}

// ---------------------------------------------------------------------------
// Lambert W, principal branch
// ---------------------------------------------------------------------------

// W0(z) for z >= -1/e by Halley iteration.  Seeds: the branch-point expansion
// in p = sqrt(2(ez+1)) near z = -1/e, log z - log log z for large z, and z
// itself (the leading series term) otherwise.
inline double lambert_w0(double z) {
    require(!std::isnan(z), "lambert_w0: NaN argument");
    const double em1 = std::exp(-1.0);
    if (z < -em1) {
        // allow for rounding of -1/e itself
        require(z > -em1 - 1e-15, "lambert_w0: argument below -1/e");
        z = -em1;
    }
    if (z == -em1) return -1.0;
    if (z == 0.0) return 0.0;

    double w;
    double q = 2.0 * (std::exp(1.0) * z + 1.0);
    if (q < 0.5) {
        double p = std::sqrt(q);
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (z > 3.0) {
        double l1 = std::log(z);
        w = l1 - std::log(l1);
    } else {
        w = std::log1p(z);  // matches W0's series to first order, z > -1 here
    }

    for (int it = 0; it < 50; ++it) {
        double e = std::exp(w);
        double f = w * e - z;
        double denom = e * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        double dw = f / denom;
        w -= dw;
        if (std::abs(dw) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace balking_ps
