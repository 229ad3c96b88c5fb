#pragma once

// Spectral (eigenvalue-series) machinery for the conditional sojourn-time
// density of the processor-sharing queue with joining probability 1/(n+1).
//
// For each index m >= 1 the quadratic  m v^2 + (2m + rho) v + m = 0  in
// v = nu + 1 yields an eigenvalue pair (nu_m, nu~_m) with nu~ < -1 < nu < 0.
// The density conditioned on n other customers at arrival is
//
//     p_n(t) = sum_m [ C_m(nu_m) phi_m(n, nu_m) e^{nu_m t}
//                    + C_m(nu~_m) phi_m(n, nu~_m) e^{nu~_m t} ].
//
// Tails, moments, and Laplace-transform pole sums reuse the same series with
// a different spectral weight g(nu).  Pair terms decay like m^{-3/2}, so the
// sum is accelerated with an Euler-Maclaurin tail over real m evaluated at
// doubling checkpoints.
//
// The expansion is not orthogonal: the peak magnitude of C_m phi_m(n, .)
// grows roughly like rho^{-n/2} sqrt(n!) while the series value stays O(n),
// so at deep conditioning levels the terms cancel through many digits.  Once
// the estimated peak-to-value ratio exceeds ~e^9 the pair terms are computed
// in IEEE binary128 (__float128); below that plain doubles are faster and
// fully sufficient.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <utility>
#include <vector>

#include <quadmath.h>

#include "balking_ps/common.hpp"
#include "balking_ps/quadrature.hpp"
#include "balking_ps/specfun.hpp"

namespace balking_ps {

// ---------------------------------------------------------------------------
// eigenvalues and expansion coefficients
// ---------------------------------------------------------------------------

// Eigenvalue pair for (possibly real) index m >= 1.  lam0 = 1 + nu_1 is the
// spectral gap that controls every large-t tail law; it is stored when m = 1.
// gap and gap_tilde hold 1 + nu and 1 + nu_tilde to full relative accuracy
// (recomputing nu + 1 from the stored nu loses ~6 digits once m is large,
// which matters inside exponents scaled by m).
struct EigenPair {
    double m = 1.0;
    double nu = 0.0;
    double nu_tilde = 0.0;
    double gap = 0.0;        // 1 + nu       = ( sqrt(rho^2+4m rho) - rho)/(2m)
    double gap_tilde = 0.0;  // 1 + nu_tilde = (-sqrt(rho^2+4m rho) - rho)/(2m)
    double lam0 = 0.0;
};

inline EigenPair eigenvalues(double rho, double m) {
    require(std::isfinite(rho) && rho > 0.0, "eigenvalues: rho must be > 0");
    require(std::isfinite(m) && m >= 1.0, "eigenvalues: m must be >= 1");
    double s = std::sqrt(rho * rho + 4.0 * m * rho);
    EigenPair p;
    p.m = m;
    p.gap = (s - rho) / (2.0 * m);
    p.gap_tilde = (-s - rho) / (2.0 * m);
    p.nu = -1.0 + p.gap;
    p.nu_tilde = -1.0 + p.gap_tilde;
    if (m == 1.0) p.lam0 = (s - rho) / 2.0;  // = 1 + nu_1
    return p;
}

// Spectral gap 1 + nu_1 = (sqrt(rho^2 + 4 rho) - rho) / 2.
inline double lambda0(double rho) {
    require(std::isfinite(rho) && rho > 0.0, "lambda0: rho must be > 0");
    return (std::sqrt(rho * rho + 4.0 * rho) - rho) / 2.0;
}

// Expansion coefficient C_m(nu) = (m^{m-1}/m!) e^{-m} nu/(nu - 1), safe for
// large or real m via the log form.
inline double coefficient(double /*rho*/, double m, double nu) {
    require(m >= 1.0, "coefficient: m must be >= 1");
    return std::exp(log_series_weight(m)) * nu / (nu - 1.0);
}

// ---------------------------------------------------------------------------
// eigenfunction phi_m(n, nu)
// ---------------------------------------------------------------------------

namespace detail {

// binary128 scalar for the deep-conditioning path.
using f128 = __float128;

inline double fp_abs(double x) { return std::abs(x); }
inline double fp_log(double x) { return std::log(x); }
inline double fp_exp(double x) { return std::exp(x); }
inline f128 fp_abs(f128 x) { return fabsq(x); }
inline f128 fp_log(f128 x) { return logq(x); }
inline f128 fp_exp(f128 x) { return expq(x); }

// Three-term recurrence shared by both directions, written in terms of the
// spectral gap x = nu + 1 (the recurrence never needs nu itself, and the gap
// is known exactly while nu + 1 recomputed from nu loses digits):
//   x (k+1) phi(k) = k phi(k-1) - rho phi(k) + rho phi(k+1).
// Forward is stable while the wanted solution still dominates, i.e. for
// n <= 0.5 m / (-nu); beyond that the second solution of the recurrence
// takes over and a Miller-style backward pass is required.

template <class T>
T phi_forward(T rho, T gap, int n) {
    T prev = 0.0, cur = 1.0;
    for (int k = 0; k < n; ++k) {
        T nxt = ((gap * T(k + 1) + rho) * cur - T(k) * prev) / rho;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// Backward (Miller) evaluation normalized by phi(0) = 1.  The start index is
// chosen by accumulating the per-step suppression factor of the unwanted
// solution, sigma(i) = (|b| + sqrt(disc)) / (|b| - sqrt(disc)) with
// b = x(i+1) + rho and disc = b^2 - 4 rho i, until 40 nats have been
// collected.  Where disc <= 0 the recurrence's characteristic roots form a
// complex pair, both candidate solutions share one envelope, and no
// suppression is credited.  The scan only picks an index, so it runs in
// doubles regardless of T.
template <class T>
T phi_miller(T rho, T gap, int n) {
    const double rho_d = static_cast<double>(rho);
    const double gap_d = static_cast<double>(gap);
    double acc = 0.0;
    long long i = std::max(n, 1);
    const long long hard_cap = 1000LL * (n + 50);
    while (acc < 40.0) {
        ++i;
        double b = gap_d * (i + 1.0) + rho_d;
        double disc = b * b - 4.0 * rho_d * static_cast<double>(i);
        if (disc > 0.0) {
            double sq = std::sqrt(disc);
            double ratio = (std::abs(b) + sq) / (std::abs(b) - sq);
            if (ratio > 1.0) acc += std::log(ratio);
        }
        if (i > hard_cap) break;
    }
    const long long start = i + 5;

    T hi = 0.0;   // scaled phi at index k+1
    T lo = 1.0;   // scaled phi at index k
    int esc = 0;  // true value = stored * (1e200)^esc
    T v_n = 0.0, v_0 = 0.0;
    int esc_n = 0, esc_0 = 0;
    for (long long k = start; k >= 1; --k) {
        if (k == n) { v_n = lo; esc_n = esc; }
        T nxt = ((gap * T(static_cast<double>(k + 1)) + rho) * lo - rho * hi) /
                T(static_cast<double>(k));
        hi = lo;
        lo = nxt;
        T a = fp_abs(lo);
        if (a > T(kRescaleHi)) {
            lo *= T(kRescaleLo);
            hi *= T(kRescaleLo);
            ++esc;
        } else if (a < T(kRescaleLo) && a > T(0)) {
            lo *= T(kRescaleHi);
            hi *= T(kRescaleHi);
            --esc;
        }
    }
    v_0 = lo;
    esc_0 = esc;
    if (v_n == T(0)) return T(0);
    T mag = fp_exp(fp_log(fp_abs(v_n)) - fp_log(fp_abs(v_0)) +
                   T(esc_n - esc_0) * T(kRescaleLog));
    bool neg = (v_n < T(0)) != (v_0 < T(0));
    return neg ? -mag : mag;
}

// Eigenfunction phi_m(n, nu) normalized by phi_m(0, nu) = 1, addressed by
// the gap x = nu + 1; m may be real (the Euler-Maclaurin tail integrates
// over it).
template <class T>
T phi_eval(T rho, T m, int n, T gap) {
    if (n == 0) return T(1);
    double forward_limit =
        0.5 * static_cast<double>(m) / (1.0 - static_cast<double>(gap));
    if (static_cast<double>(n) <= forward_limit)
        return phi_forward(rho, gap, n);
    return phi_miller(rho, gap, n);
}

}  // namespace detail

// Eigenfunction phi_m(n, nu) normalized by phi_m(0, nu) = 1; m may be real.
// nu must be one of the two eigenvalues belonging to (rho, m).
inline double eigenfunction(double rho, double m, int n, double nu) {
    require(n >= 0, "eigenfunction: n must be >= 0");
    require(m >= 1.0, "eigenfunction: m must be >= 1");
    return detail::phi_eval(rho, m, n, nu + 1.0);
}

// ---------------------------------------------------------------------------
// binary128 helpers for the deep-conditioning path
// ---------------------------------------------------------------------------

namespace detail {

// Series weight w_m = m^{m-1} e^{-m} / m! in binary128, via lgammaq so the
// Stirling-scale pieces cancel inside one quad-accurate exponent.  Integer
// indices are memoized: the main sum revisits the same m across calls.
inline f128 series_weight_q(f128 m) {
    double md = static_cast<double>(m);
    if (md < 4096.0 && md == std::floor(md)) {
        static thread_local std::vector<f128> memo;
        size_t idx = static_cast<size_t>(md) - 1;
        if (idx >= memo.size()) {
            size_t k0 = memo.size();
            memo.resize(idx + 1);
            for (size_t k = k0; k <= idx; ++k) {
                f128 mm = static_cast<double>(k + 1);
                memo[k] = expq((mm - f128(1)) * logq(mm) - mm -
                               lgammaq(mm + f128(1)));
            }
        }
        return memo[idx];
    }
    return expq((m - f128(1)) * logq(m) - m - lgammaq(m + f128(1)));
}

struct EigenGapsQ {
    f128 gap;        // 1 + nu
    f128 gap_tilde;  // 1 + nu_tilde
};

inline EigenGapsQ eigen_gaps_q(f128 rho, f128 m) {
    f128 s = sqrtq(rho * rho + f128(4) * m * rho);
    return {(s - rho) / (f128(2) * m), (-s - rho) / (f128(2) * m)};
}

// Gauss-Legendre nodes/weights in binary128 (Newton on P_n from the double
// seed), cached per order.
struct GLRuleQ {
    std::vector<f128> nodes;
    std::vector<f128> weights;
};

inline GLRuleQ make_gauss_legendre_q(int n) {
    require(n >= 1 && n <= 4096, "gauss_legendre_q: order out of range");
    GLRuleQ rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        f128 x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        f128 pd = 0.0;
        for (int it = 0; it < 60; ++it) {
            f128 p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                f128 p2 =
                    (f128(2 * k - 1) * x * p1 - f128(k - 1) * p0) / f128(k);
                p0 = p1;
                p1 = p2;
            }
            f128 pn = (n == 1) ? x : p1;
            f128 pm = (n == 1) ? f128(1) : p0;
            pd = f128(n) * (x * pn - pm) / (x * x - f128(1));
            f128 dx = pn / pd;
            x -= dx;
            if (fabsq(dx) < f128(1e-32)) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = f128(2) / ((f128(1) - x * x) * pd * pd);
    }
    return rule;
}

inline const GLRuleQ& gauss_legendre_rule_q(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GLRuleQ>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GLRuleQ>(make_gauss_legendre_q(n));
    return *slot;
}

template <class F>
f128 gauss_legendre_q(F&& f, f128 a, f128 b, int n) {
    const GLRuleQ& rule = gauss_legendre_rule_q(n);
    f128 mid = (a + b) / f128(2);
    f128 half = (b - a) / f128(2);
    f128 acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

// ---------------------------------------------------------------------------
// series driver: compensated pair sum + Euler-Maclaurin completion
// ---------------------------------------------------------------------------

// Sums term_at(m) over integer m >= 1 in scalar type T (double by default,
// binary128 on the deep-conditioning path).  term_at must also accept real m
// (the tail integrates over it).  Convergence is declared either when five
// consecutive terms are negligible relative to the running sum, or when two
// successive Euler-Maclaurin-completed values at doubling checkpoints agree
// within tol.
template <class T = double, class TermFn>
DensityResult sum_with_em_tail(TermFn&& term_at, double tol, long long m_cap,
                               long long first_checkpoint) {
    T sum = 0.0, comp = 0.0;  // Kahan pair
    auto kadd = [&](T x) {
        T y = x - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    int small_streak = 0;
    long long checkpoint = std::max<long long>(first_checkpoint, 8);
    T prev_completed = 0.0;
    bool have_prev = false;
    DensityResult out;
    out.method = Method::spectral;

    // Midpoint Euler-Maclaurin completion at a = m_last + 1/2:
    //   sum_{m > m_last} f(m) = int_a^inf f + f'(a)/24 - 7 f'''(a)/5760 + ...
    // With unit-spacing central differences d1 = f(a+1/2) - f(a-1/2) and
    // d3 = f(a+3/2) - 3 f(a+1/2) + 3 f(a-1/2) - f(a-3/2) the two derivative
    // corrections collapse to d1/24 - 17 d3/5760 (the d3/24 inside d1's
    // truncation folds into the f''' coefficient).  The integral runs over
    // the substitution m = a/v^2, smooth on (0, 1].
    auto completed_at = [&](double m_last) {
        T a = m_last + 0.5;
        auto sub = [&](T v) { return term_at(a / (v * v)) * T(2) * a / (v * v * v); };
        T integral;
        if constexpr (std::is_same_v<T, f128>)
            integral = gauss_legendre_q(sub, f128(0), f128(1), 96);
        else
            integral = gauss_legendre(sub, 0.0, 1.0, 96);
        T fp1 = term_at(a + T(0.5)), fm1 = term_at(a - T(0.5));
        T fp3 = term_at(a + T(1.5)), fm3 = term_at(a - T(1.5));
        T d1 = fp1 - fm1;
        T d3 = fp3 - T(3) * fp1 + T(3) * fm1 - fm3;
        return sum + integral + d1 / T(24) - d3 * T(17) / T(5760);
    };

    for (long long m = 1; m <= m_cap; ++m) {
        T term = term_at(T(static_cast<double>(m)));
        kadd(term);
        ++out.terms_used;

        if (m >= 10 && fp_abs(term) < T(tol) * fp_abs(sum)) {
            if (++small_streak >= 5) {
                out.value = static_cast<double>(sum);
                out.err_est = 5.0 * static_cast<double>(fp_abs(term)) +
                              tol * std::abs(out.value);
                return out;
            }
        } else {
            small_streak = 0;
        }

        if (m == checkpoint) {
            T completed = completed_at(static_cast<double>(m));
            if (have_prev) {
                double c = static_cast<double>(completed);
                double pc = static_cast<double>(prev_completed);
                double scale = std::max({std::abs(c), std::abs(pc), 1e-300});
                if (std::abs(c - pc) <= tol * scale) {
                    out.value = c;
                    out.err_est = std::abs(c - pc) + 0.25 * tol * scale;
                    return out;
                }
            }
            prev_completed = completed;
            have_prev = true;
            checkpoint *= 2;
        }
    }
    throw convergence_error(
        "spectral series: eigenvalue-pair budget exhausted",
        static_cast<double>(sum),
        have_prev
            ? std::abs(static_cast<double>(sum) - static_cast<double>(prev_completed))
            : std::abs(static_cast<double>(sum)));
}

// One full eigenvalue-pair term at (possibly real) index m.  weight(nu)
// supplies the spectral factor for the quantity being computed.
template <class G>
double pair_term(double rho, int n, double t, double m, G& weight) {
    EigenPair ev = eigenvalues(rho, m);
    double tot = 0.0;
    const double gaps[2] = {ev.gap, ev.gap_tilde};
    for (double gap : gaps) {
        double nu = gap - 1.0;
        tot += coefficient(rho, m, nu) * phi_eval(rho, m, n, gap) *
               weight(nu) * std::exp(nu * t);
    }
    return tot;
}

// The same term in binary128.
template <class G>
f128 pair_term_q(double rho, int n, double t, f128 m, G& weight) {
    EigenGapsQ eg = eigen_gaps_q(f128(rho), m);
    f128 w = series_weight_q(m);
    f128 tot = 0.0;
    const f128 gaps[2] = {eg.gap, eg.gap_tilde};
    for (f128 gap : gaps) {
        f128 nu = gap - f128(1);
        f128 coef = w * nu / (nu - f128(1));
        f128 e = (t == 0.0) ? f128(1) : expq(nu * f128(t));
        tot += coef * phi_eval(f128(rho), m, n, gap) * weight(nu) * e;
    }
    return tot;
}

}  // namespace detail

// Eigenvalue-pair series for spectral weight g(nu): 1 gives the density,
// -1/nu the tail, 1/nu^2 the mean, -2/nu^3 the second moment, and
// 1/(theta - nu) the Laplace-transform pole sum.  g must accept both double
// and binary128 arguments (a generic lambda does).
template <class G>
DensityResult pair_series(const ModelParams& params, int n, double t, G&& weight) {
    params.validate();
    require(n >= 0, "pair_series: n must be >= 0");
    require(t >= 0.0, "pair_series: t must be >= 0");
    const double rho = params.rho;
    // Peak size of C_m phi_m(n, .) relative to the summed value grows roughly
    // like rho^{-n/2} sqrt(n!).  Past ~e^9 the cancellation costs double
    // arithmetic more digits than the tolerance target can spare, so the pair
    // terms are evaluated in binary128 instead.
    double log_amp = 0.5 * (log_gamma(n + 1.0) - n * std::log(rho));
    if (log_amp > 9.2) {
        auto term_at = [&](detail::f128 m) {
            return detail::pair_term_q(rho, n, t, m, weight);
        };
        return detail::sum_with_em_tail<detail::f128>(
            term_at, params.tol, params.m_cap, std::max(16, 4 * n));
    }
    auto term_at = [&](double m) { return detail::pair_term(rho, n, t, m, weight); };
    return detail::sum_with_em_tail(term_at, params.tol, params.m_cap,
                                    std::max(16, 4 * n));
}

// ---------------------------------------------------------------------------
// public spectral evaluations
// ---------------------------------------------------------------------------

// Density of the sojourn time conditioned on n other customers at arrival.
inline DensityResult conditional_density(const ModelParams& params, int n, double t) {
    auto one = [](auto) { return 1.0; };
    DensityResult r = pair_series(params, n, t, one);
    r.check_invariants();
    return r;
}

// Tail probability P[sojourn > t | n others at arrival].
inline DensityResult conditional_tail(const ModelParams& params, int n, double t) {
    auto g = [](auto nu) { return -1.0 / nu; };
    DensityResult r = pair_series(params, n, t, g);
    r.check_invariants();
    return r;
}

// Mean conditional sojourn time, exact closed form: the unique linear
// solution of the first-moment recurrence
//   rho M_{n+1} - (n+1+rho) M_n + n M_{n-1} = -(n+1).
inline double mean_sojourn(const ModelParams& params, int n) {
    params.validate();
    require(n >= 0, "mean_sojourn: n must be >= 0");
    return 0.5 * (n + params.rho) + 1.0;
}

// Second moment of the conditional sojourn time, exact closed form: the
// unique quadratic solution of the second-moment recurrence
//   rho S_{n+1} - (n+1+rho) S_n + n S_{n-1} = -2(n+1) M_n,
// namely  S_n = n^2/3 + 5(rho+2) n/6 + (5 rho^2 + 18 rho + 12)/6.
// (Matching the recurrence coefficient by coefficient pins all three terms;
// the rho = 0 value (n+2)(n+3)/3 and the series integral agree.)
inline double second_moment(const ModelParams& params, int n) {
    params.validate();
    require(n >= 0, "second_moment: n must be >= 0");
    const double rho = params.rho;
    return n * n / 3.0 + 5.0 * (rho + 2.0) * n / 6.0 +
           (5.0 * rho * rho + 18.0 * rho + 12.0) / 6.0;
}

// Mean sojourn time conditioned on n others, from the spectral series.
inline double mean_sojourn_series(const ModelParams& params, int n) {
    auto g = [](auto nu) { return 1.0 / (nu * nu); };
    return pair_series(params, n, 0.0, g).value;
}

// Second moment of the conditional sojourn time, from the spectral series.
inline double second_moment_series(const ModelParams& params, int n) {
    auto g = [](auto nu) { return -2.0 / (nu * nu * nu); };
    return pair_series(params, n, 0.0, g).value;
}

// ---------------------------------------------------------------------------
// unconditional (stationary arrival) density
// ---------------------------------------------------------------------------

namespace detail {

// Poisson mixture of the eigenfunctions in closed form:
//   Phi_m(nu) = e^{-rho} (-nu)^{m-1} e^{rho/(nu+1)},
// parameterized by the exactly-computed gap x = nu + 1 (for large real m both
// exponent pieces grow like sqrt(m rho) while their sum stays O(1), so -nu
// must enter as 1 - x via log1p to keep the cancellation clean).
inline double phi_mixture(double rho, double m, double x) {
    return std::exp(-rho + (m - 1.0) * std::log1p(-x) + rho / x);
}

}  // namespace detail

// Density of the sojourn time of a customer who joins a stationary queue
// (queue length Poisson(rho) by the arrival theorem for this model): the
// spectral series with the eigenfunction replaced by its closed-form Poisson
// mixture.  At t = 0 the value is (1 - e^{-rho}) / rho.
inline DensityResult unconditional_density(const ModelParams& params, double t) {
    params.validate();
    require(t >= 0.0, "unconditional_density: t must be >= 0");
    const double rho = params.rho;
    auto term_at = [&](double m) {
        EigenPair ev = eigenvalues(rho, m);
        return coefficient(rho, m, ev.nu) * detail::phi_mixture(rho, m, ev.gap) *
                   std::exp(ev.nu * t) +
               coefficient(rho, m, ev.nu_tilde) *
                   detail::phi_mixture(rho, m, ev.gap_tilde) *
                   std::exp(ev.nu_tilde * t);
    };
    DensityResult r = detail::sum_with_em_tail(term_at, params.tol, params.m_cap, 16);
    r.check_invariants();
    return r;
}

// Tail probability of the stationary-arrival sojourn time: the same Poisson
// mixture with each mode integrated from t to infinity (weight -1/nu).
inline DensityResult unconditional_tail(const ModelParams& params, double t) {
    params.validate();
    require(t >= 0.0, "unconditional_tail: t must be >= 0");
    const double rho = params.rho;
    auto term_at = [&](double m) {
        EigenPair ev = eigenvalues(rho, m);
        return coefficient(rho, m, ev.nu) * detail::phi_mixture(rho, m, ev.gap) *
                   std::exp(ev.nu * t) * (-1.0 / ev.nu) +
               coefficient(rho, m, ev.nu_tilde) *
                   detail::phi_mixture(rho, m, ev.gap_tilde) *
                   std::exp(ev.nu_tilde * t) * (-1.0 / ev.nu_tilde);
    };
    DensityResult r = detail::sum_with_em_tail(term_at, params.tol, params.m_cap, 16);
    r.check_invariants();
    return r;
}

}  // namespace balking_ps
