#pragma once

// Direct integration of the truncated master equations for the tagged
// customer.  Both the conditional density p_n(t) (initial value 1/(n+1)) and
// the conditional tail V_n(t) (initial value 1) satisfy the same tridiagonal
// system
//
//   y_k' = k/(k+1) y_{k-1} - (1 + rho/(k+1)) y_k + rho/(k+1) y_{k+1},
//
// closed by y_{n_max+1} = 0.  The integrator is an embedded Dormand-Prince
// 5(4) pair with PI-free step control, exact landing on requested output
// times, and an optional truncation-doubling cross-check (on by default).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "balking_ps/common.hpp"
#include "balking_ps/spectral.hpp"  // lambda0 for adaptive horizons

namespace balking_ps {

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    bool doubling_check = true;   // re-solve with twice the truncation level
    int extra_levels = 0;         // widen the state space beyond the default
};

// Snapshot of the truncated level populations at one time.
struct TruncatedState {
    int n_max = 0;
    double time = 0.0;
    std::vector<double> values;

    void check_density_invariants() const {
        for (double v : values) require(v >= -1e-12, "density state went negative");
    }
    void check_tail_invariants() const {
        for (double v : values)
            require(v >= -1e-12 && v <= 1.0 + 1e-12, "tail state left [0, 1]");
    }
};

namespace detail {

// Default truncation level: covers the Poisson(rho)-scale bulk plus a safety
// margin; the balking drift keeps the population from wandering far above it.
inline int default_n_max(double rho, int n_query) {
    return n_query + 10 + static_cast<int>(std::ceil(5.0 * std::sqrt(rho) + rho));
}

class MasterSystem {
 public:
    MasterSystem(double rho, int n_max) : n_max_(n_max) {
        up_.resize(n_max + 1);
        diag_.resize(n_max + 1);
        down_.resize(n_max + 1);
        for (int k = 0; k <= n_max; ++k) {
            up_[k] = rho / (k + 1.0);
            diag_[k] = -(1.0 + rho / (k + 1.0));
            down_[k] = k / (k + 1.0);
        }
    }

    void rhs(const std::vector<double>& y, std::vector<double>& dy) const {
        int n = n_max_;
        for (int k = 0; k <= n; ++k) {
            double v = diag_[k] * y[k];
            if (k > 0) v += down_[k] * y[k - 1];
            if (k < n) v += up_[k] * y[k + 1];
            dy[k] = v;
        }
    }

    int n_max() const { return n_max_; }

 private:
    int n_max_;
    std::vector<double> up_, diag_, down_;
};

// One accepted integrator step, kept for cubic-Hermite dense output of a
// single component.
struct StepRecord {
    double t0, t1;
    double y0, y1;   // component value at the step ends
    double f0, f1;   // component derivative at the step ends
};

inline double hermite_eval(const StepRecord& s, double t) {
    double h = s.t1 - s.t0;
    double u = (t - s.t0) / h;
    double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * s.y0 + (u3 - 2 * u2 + u) * h * s.f0 +
           (-2 * u3 + 3 * u2) * s.y1 + (u3 - u2) * h * s.f1;
}

// Dormand-Prince 5(4) with FSAL.  Integrates from t=0, stops exactly on the
// requested output times, optionally records the trace of one component.
class Dopri5 {
 public:
    Dopri5(const MasterSystem& sys, OdeOptions opt) : sys_(sys), opt_(opt) {}

    // Advances y in place from time t_from to t_to; collects the component
    // trace for `watch` (if >= 0) into `trace`.
    void advance(std::vector<double>& y, double t_from, double t_to, int watch,
                 std::vector<StepRecord>* trace) {
        const std::size_t d = y.size();
        std::vector<double> k1(d), k2(d), k3(d), k4(d), k5(d), k6(d), k7(d);
        std::vector<double> tmp(d), y5(d), y4(d);
        double t = t_from;
        sys_.rhs(y, k1);
        double h = initial_step(y, k1, t_to - t_from);
        int rejects_in_a_row = 0;

        while (t < t_to) {
            h = std::min(h, t_to - t);
            stage(y, k1, h, {0.2}, tmp);
            sys_.rhs(tmp, k2);
            stage(y, k1, h, {3.0 / 40, 9.0 / 40}, tmp, &k2);
            sys_.rhs(tmp, k3);
            stage4(y, h, k1, k2, k3, tmp);
            sys_.rhs(tmp, k4);
            stage5(y, h, k1, k2, k3, k4, tmp);
            sys_.rhs(tmp, k5);
            stage6(y, h, k1, k2, k3, k4, k5, tmp);
            sys_.rhs(tmp, k6);
            for (std::size_t i = 0; i < d; ++i) {
                y5[i] = y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] +
                                    125.0 / 192 * k4[i] - 2187.0 / 6784 * k5[i] +
                                    11.0 / 84 * k6[i]);
            }
            sys_.rhs(y5, k7);
            double err = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                double e = h * (71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] +
                                71.0 / 1920 * k4[i] - 17253.0 / 339200 * k5[i] +
                                22.0 / 525 * k6[i] - 1.0 / 40 * k7[i]);
                double sc = opt_.abs_tol +
                            opt_.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
                err += (e / sc) * (e / sc);
            }
            err = std::sqrt(err / d);
            if (err <= 1.0) {
                if (trace && watch >= 0) {
                    trace->push_back({t, t + h, y[watch], y5[watch],
                                      k1[watch], k7[watch]});
                }
                t += h;
                y.swap(y5);
                k1.swap(k7);   // FSAL
                rejects_in_a_row = 0;
            } else if (++rejects_in_a_row > 60) {
                throw convergence_error("master-equation step control stalled",
                                        y[watch >= 0 ? watch : 0], err);
            }
            double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::clamp(factor, 0.2, 5.0);
            if (!(h > 1e-14)) throw convergence_error(
                "master-equation step size underflow", y[watch >= 0 ? watch : 0], err);
        }
    }

 private:
    double initial_step(const std::vector<double>& y, const std::vector<double>& f,
                        double span) const {
        double ynorm = 0.0, fnorm = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(f[i]));
        }
        double h = (fnorm > 0) ? 0.01 * (ynorm + opt_.abs_tol) / fnorm : 0.01;
        return std::min({h, span, 0.1});
    }

    void stage(const std::vector<double>& y, const std::vector<double>& k1, double h,
               std::initializer_list<double> cs, std::vector<double>& out,
               const std::vector<double>* k2 = nullptr) const {
        auto it = cs.begin();
        double a1 = *it++;
        double a2 = (it != cs.end()) ? *it : 0.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            out[i] = y[i] + h * (a1 * k1[i] + (k2 ? a2 * (*k2)[i] : 0.0));
    }
    void stage4(const std::vector<double>& y, double h, const std::vector<double>& k1,
                const std::vector<double>& k2, const std::vector<double>& k3,
                std::vector<double>& out) const {
        for (std::size_t i = 0; i < y.size(); ++i)
            out[i] = y[i] + h * (44.0 / 45 * k1[i] - 56.0 / 15 * k2[i] +
                                 32.0 / 9 * k3[i]);
    }
    void stage5(const std::vector<double>& y, double h, const std::vector<double>& k1,
                const std::vector<double>& k2, const std::vector<double>& k3,
                const std::vector<double>& k4, std::vector<double>& out) const {
        for (std::size_t i = 0; i < y.size(); ++i)
            out[i] = y[i] + h * (19372.0 / 6561 * k1[i] - 25360.0 / 2187 * k2[i] +
                                 64448.0 / 6561 * k3[i] - 212.0 / 729 * k4[i]);
    }
    void stage6(const std::vector<double>& y, double h, const std::vector<double>& k1,
                const std::vector<double>& k2, const std::vector<double>& k3,
                const std::vector<double>& k4, const std::vector<double>& k5,
                std::vector<double>& out) const {
        for (std::size_t i = 0; i < y.size(); ++i)
            out[i] = y[i] + h * (9017.0 / 3168 * k1[i] - 355.0 / 33 * k2[i] +
                                 46732.0 / 5247 * k3[i] + 49.0 / 176 * k4[i] -
                                 5103.0 / 18656 * k5[i]);
    }

    const MasterSystem& sys_;
    OdeOptions opt_;
};

// Solves the master equations for one truncation level and returns the watch
// component at each requested time (times need not be sorted).
inline std::vector<double> solve_component(double rho, int n_max, bool tail_init,
                                           int watch, const std::vector<double>& ts,
                                           const OdeOptions& opt,
                                           std::vector<StepRecord>* trace = nullptr) {
    MasterSystem sys(rho, n_max);
    std::vector<double> y(n_max + 1);
    for (int k = 0; k <= n_max; ++k) y[k] = tail_init ? 1.0 : 1.0 / (k + 1.0);

    std::vector<std::size_t> order(ts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });

    Dopri5 stepper(sys, opt);
    std::vector<double> out(ts.size());
    double t = 0.0;
    for (std::size_t idx : order) {
        double target = ts[idx];
        require(target >= 0.0, "master equations: negative time requested");
        if (target > t) {
            stepper.advance(y, t, target, watch, trace);
            t = target;
        }
        out[idx] = y[watch];
    }
    return out;
}

inline std::vector<double> solve_checked(double rho, int n_query, bool tail_init,
                                         const std::vector<double>& ts,
                                         const OdeOptions& opt) {
    int n_max = default_n_max(rho, n_query) + opt.extra_levels;
    std::vector<double> base =
        solve_component(rho, n_max, tail_init, n_query, ts, opt);
    if (opt.doubling_check) {
        std::vector<double> wide =
            solve_component(rho, 2 * n_max, tail_init, n_query, ts, opt);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double scale = std::max({std::abs(base[i]), std::abs(wide[i]), 1e-12});
            if (std::abs(base[i] - wide[i]) >
                1000.0 * (opt.abs_tol + opt.rel_tol * scale)) {
                throw convergence_error(
                    "master equations: truncation level too small",
                    wide[i], std::abs(base[i] - wide[i]));
            }
            base[i] = wide[i];  // keep the better value
        }
    }
    return base;
}

// The public grid interface promises strictly increasing, nonnegative times.
inline void require_time_grid(const std::vector<double>& ts, const char* who) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
        require(std::isfinite(ts[i]) && ts[i] >= 0.0, who);
        if (i > 0) require(ts[i] > ts[i - 1], who);
    }
}

}  // namespace detail

// Conditional sojourn density p_n(t) at each requested time, by direct
// integration of the master equations.
inline std::vector<double> integrate_density(const ModelParams& params, int n,
                                             const std::vector<double>& ts,
                                             const OdeOptions& opt = {}) {
    params.validate();
    require(n >= 0, "integrate_density: n must be >= 0");
    detail::require_time_grid(
        ts, "integrate_density: time grid must be nonnegative and increasing");
    return detail::solve_checked(params.rho, n, /*tail_init=*/false, ts, opt);
}

// Conditional tail V_n(t) = P[sojourn > t | n others] at each requested time.
inline std::vector<double> integrate_tail(const ModelParams& params, int n,
                                          const std::vector<double>& ts,
                                          const OdeOptions& opt = {}) {
    params.validate();
    require(n >= 0, "integrate_tail: n must be >= 0");
    detail::require_time_grid(
        ts, "integrate_tail: time grid must be nonnegative and increasing");
    return detail::solve_checked(params.rho, n, /*tail_init=*/true, ts, opt);
}

// Full state vector (all levels 0..n_max) at a single time; used for
// stationary (Poisson) mixtures.
inline TruncatedState density_state(const ModelParams& params, int n_max, double t,
                                    const OdeOptions& opt = {}) {
    params.validate();
    detail::MasterSystem sys(params.rho, n_max);
    std::vector<double> y(n_max + 1);
    for (int k = 0; k <= n_max; ++k) y[k] = 1.0 / (k + 1.0);
    detail::Dopri5 stepper(sys, opt);
    if (t > 0.0) stepper.advance(y, 0.0, t, -1, nullptr);
    TruncatedState st;
    st.n_max = n_max;
    st.time = t;
    st.values = std::move(y);
    return st;
}

namespace detail {

// Poisson(rho) mixture of the full state vector at time t, for either
// initial condition family.
inline double poisson_mixture_ode(const ModelParams& params, double t,
                                  bool tail_init, const OdeOptions& opt) {
    double rho = params.rho;
    int n_max = default_n_max(rho, 0) + 30 + opt.extra_levels;
    MasterSystem sys(rho, n_max);
    std::vector<double> y(n_max + 1);
    for (int k = 0; k <= n_max; ++k) y[k] = tail_init ? 1.0 : 1.0 / (k + 1.0);
    Dopri5 stepper(sys, opt);
    if (t > 0.0) stepper.advance(y, 0.0, t, -1, nullptr);
    // Poisson weights by log recurrence; the mixture converges far inside
    // the truncation level.
    KahanSum acc;
    double logw = -rho;  // log Pois_0
    for (int k = 0; k <= n_max; ++k) {
        acc.add(std::exp(logw) * y[k]);
        logw += std::log(rho) - std::log1p(static_cast<double>(k));
    }
    return acc.value();
}

}  // namespace detail

// Stationary-arrival density via the ODE route: Poisson(rho) mixture of the
// full state vector.
inline double unconditional_density_ode(const ModelParams& params, double t,
                                        const OdeOptions& opt = {}) {
    return detail::poisson_mixture_ode(params, t, /*tail_init=*/false, opt);
}

// Stationary-arrival tail probability via the ODE route.
inline double unconditional_tail_ode(const ModelParams& params, double t,
                                     const OdeOptions& opt = {}) {
    return detail::poisson_mixture_ode(params, t, /*tail_init=*/true, opt);
}

// ---------------------------------------------------------------------------
// moments by quadrature over the integrated tail
// ---------------------------------------------------------------------------

namespace detail {

// Integrates w(t) V_n(t) over [0, infinity): solves the tail system out to an
// adaptive horizon, then refines a trapezoid rule on the dense (cubic
// Hermite) trace with Richardson extrapolation, plus an exponential-tail
// remainder for the horizon cut.
template <class W>
double tail_functional(const ModelParams& params, int n, W&& w,
                       const OdeOptions& opt) {
    params.validate();
    const double rho = params.rho;
    const double decay = 1.0 - lambda0(rho);  // slowest spectral decay rate
    int n_max = default_n_max(rho, n) + opt.extra_levels;

    // The horizon control below reads the tail value itself, so the solve
    // needs an absolute-error floor well under the values it compares; with
    // the default 1e-10 the component bottoms out in step noise and never
    // "reaches" a small cut value.
    OdeOptions mopt = opt;
    mopt.abs_tol = std::min(opt.abs_tol, 1e-14);

    // pick a horizon where the cut remainder (~ w V / decay) is negligible
    double horizon = 40.0 / decay;
    MasterSystem sys(rho, n_max);
    std::vector<double> y(n_max + 1, 1.0);
    std::vector<StepRecord> trace;
    Dopri5 stepper(sys, mopt);
    stepper.advance(y, 0.0, horizon, n, &trace);
    while (std::abs(w(horizon + 1.0 / decay)) * std::max(y[n], 0.0) / decay >
               1e-12 &&
           horizon < 4000.0 / decay) {
        double next = horizon * 1.5;
        stepper.advance(y, horizon, next, n, &trace);
        horizon = next;
    }

    auto value_at = [&](double t) -> double {
        // binary search the step containing t
        std::size_t lo = 0, hi = trace.size();
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (trace[mid].t0 <= t) lo = mid; else hi = mid;
        }
        return hermite_eval(trace[lo], t);
    };

    long long n_panels = 1024;
    double prev = 0.0, refined_prev = 0.0;
    bool have_prev = false, have_refined_prev = false;
    double refined = 0.0;
    for (;;) {
        double h = horizon / n_panels;
        KahanSum acc;
        acc.add(0.5 * (w(0.0) * 1.0 + w(horizon) * y[n]));
        for (long long i = 1; i < n_panels; ++i) {
            double t = i * h;
            acc.add(w(t) * value_at(t));
        }
        double cur = acc.value() * h;
        if (have_prev) {
            refined = cur + (cur - prev) / 3.0;  // Richardson for trapezoid
            if (have_refined_prev &&
                std::abs(refined - refined_prev) <
                    1e-8 * std::max(1.0, std::abs(refined)))
                break;
            refined_prev = refined;
            have_refined_prev = true;
        }
        prev = cur;
        have_prev = true;
        n_panels *= 2;
        if (n_panels > (1LL << 22))
            throw convergence_error("moment quadrature did not settle", refined, 0.0);
    }
    // exponential remainder beyond the horizon, V ~ V(T) e^{-decay (t-T)};
    // exact for constant and linear w
    double tail = w(horizon + 1.0 / decay) * std::max(y[n], 0.0) / decay;
    return refined + tail;
}

}  // namespace detail

// Mean conditional sojourn time by the ODE route: integral of the tail.
inline double mean_sojourn_ode(const ModelParams& params, int n,
                               const OdeOptions& opt = {}) {
    return detail::tail_functional(params, n, [](double) { return 1.0; }, opt);
}

// Second moment of the conditional sojourn time by the ODE route.
inline double second_moment_ode(const ModelParams& params, int n,
                                const OdeOptions& opt = {}) {
    return detail::tail_functional(params, n, [](double t) { return 2.0 * t; }, opt);
}

}  // namespace balking_ps
