#pragma once

// Validation suite: one self-contained check per acceptance criterion,
// shared by the standalone acceptance runner and the CLI `validate`
// subcommand.  Every check prints deterministic detail lines (values only,
// no timings) so two runs with the same seed emit identical bytes.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "balking_ps/asymptotics.hpp"
#include "balking_ps/common.hpp"
#include "balking_ps/format.hpp"
#include "balking_ps/master_ode.hpp"
#include "balking_ps/simulate.hpp"
#include "balking_ps/spectral.hpp"
#include "balking_ps/transform.hpp"

namespace balking_ps::acceptance {

struct CriterionResult {
    std::string id;
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& text) {
        lines.push_back(std::string(ok ? "  [ok] " : "  [!!] ") + text);
        pass = pass && ok;
    }
    void note(const std::string& text) { lines.push_back("       " + text); }
};

namespace detail {

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

inline std::string fmt(double x) { return to_shortest(x); }

// Closed-form conditional moments.
inline double mean_closed(double rho, int n) { return 0.5 * (n + rho) + 1.0; }
inline double second_closed(double rho, int n) {
    return n * n / 3.0 + 5.0 * (rho + 2.0) / 6.0 * n + 5.0 * rho * rho / 6.0 +
           3.0 * rho + 2.0;
}

}  // namespace detail

// --- 1: conditional moments, spectral and ODE vs closed forms -------------
inline CriterionResult criterion_01(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "01_moments";
    std::vector<double> rhos = quick ? std::vector<double>{1.0, 2.0}
                                     : std::vector<double>{0.5, 1.0, 2.0, 5.0};
    std::vector<int> ns = quick ? std::vector<int>{0, 5}
                                : std::vector<int>{0, 1, 5, 20};
    double w_ms = 0, w_mo = 0, w_ss = 0, w_so = 0;
    for (double rho : rhos) {
        ModelParams P;
        P.rho = rho;
        for (int n : ns) {
            double M = detail::mean_closed(rho, n);
            double S = detail::second_closed(rho, n);
            double ms = detail::rel_err(mean_sojourn_series(P, n), M);
            double mo = detail::rel_err(mean_sojourn_ode(P, n), M);
            double ss = detail::rel_err(second_moment_series(P, n), S);
            double so = detail::rel_err(second_moment_ode(P, n), S);
            w_ms = std::max(w_ms, ms);
            w_mo = std::max(w_mo, mo);
            w_ss = std::max(w_ss, ss);
            w_so = std::max(w_so, so);
        }
    }
    r.check(w_ms <= 1e-6, "spectral mean rel err <= 1e-6, worst " + detail::fmt(w_ms));
    r.check(w_mo <= 1e-5, "ode mean rel err <= 1e-5, worst " + detail::fmt(w_mo));
    r.check(w_ss <= 1e-5, "spectral 2nd moment rel err <= 1e-5, worst " + detail::fmt(w_ss));
    r.check(w_so <= 1e-5, "ode 2nd moment rel err <= 1e-5, worst " + detail::fmt(w_so));
    return r;
}

// --- 2: completeness at t = 0 and unit mass --------------------------------
inline CriterionResult criterion_02(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "02_mass";
    std::vector<double> rhos = quick ? std::vector<double>{1.0}
                                     : std::vector<double>{0.5, 1.0, 2.0};
    int n_hi = quick ? 4 : 10;
    double w_init = 0, w_mass = 0;
    for (double rho : rhos) {
        ModelParams P;
        P.rho = rho;
        for (int n = 0; n <= n_hi; ++n) {
            w_init = std::max(w_init, std::abs(conditional_density(P, n, 0.0).value -
                                               1.0 / (n + 1.0)));
            w_mass = std::max(w_mass, std::abs(conditional_tail(P, n, 0.0).value - 1.0));
        }
    }
    r.check(w_init <= 1e-6, "series at t=0 vs 1/(n+1), worst abs err " + detail::fmt(w_init));
    r.check(w_mass <= 1e-6, "unit total mass, worst abs err " + detail::fmt(w_mass));
    return r;
}

// --- 3: Laplace transform: quadrature vs pole sum, recurrence, Wronskian ---
inline CriterionResult criterion_03(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "03_transform";
    std::vector<double> rhos = quick ? std::vector<double>{1.0}
                                     : std::vector<double>{0.5, 1.0, 2.0};
    std::vector<double> thetas = quick ? std::vector<double>{1.0, 4.0}
                                       : std::vector<double>{0.25, 1.0, 4.0};
    std::vector<int> ns = quick ? std::vector<int>{0, 3} : std::vector<int>{0, 3, 10};
    double w_match = 0, w_rec = 0, w_wron = 0;
    for (double rho : rhos) {
        ModelParams P;
        P.rho = rho;
        for (double th : thetas) {
            for (int n : ns) {
                double quad = laplace_transform(P, th, n).value;
                double poles = pole_sum_transform(P, th, n);
                w_match = std::max(w_match, detail::rel_err(quad, poles));
                if (n >= 1)
                    w_rec = std::max(w_rec, transform_recurrence_residual(P, th, n));
                w_wron = std::max(w_wron, wronskian_check(P, th, n));
            }
        }
    }
    r.check(w_match <= 1e-6, "quadrature vs pole sum rel err <= 1e-6, worst " +
                                 detail::fmt(w_match));
    r.check(w_rec <= 1e-8, "three-term recurrence residual <= 1e-8, worst " +
                               detail::fmt(w_rec));
    r.check(w_wron <= 1e-8, "Wronskian identity residual <= 1e-8, worst " +
                                detail::fmt(w_wron));
    return r;
}

// --- 4: large-t exponential tail law ---------------------------------------
inline CriterionResult criterion_04(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "04_tail_law";
    const double rho = 1.0;
    ModelParams P;
    P.rho = rho;
    double lam0 = lambda0(rho);
    double cst = (std::sqrt(rho + 4.0) - std::sqrt(rho)) /
                 (2.0 * std::sqrt(rho + 4.0)) * std::exp(-1.0);
    std::vector<int> ns = quick ? std::vector<int>{0} : std::vector<int>{0, 5};
    const double t_end = 30.0;
    bool all = true;
    for (int n : ns) {
        std::vector<double> ts{10.0, 20.0, t_end};
        std::vector<double> p = integrate_density(P, n, ts);
        std::string traj;
        double dev_end = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double ratio = p[i] * std::exp((1.0 - lam0) * ts[i]) *
                           std::pow(lam0, n) / cst;
            if (i) traj += ", ";
            traj += "t=" + detail::fmt(ts[i]) + ": " + detail::fmt(ratio - 1.0);
            if (ts[i] == t_end) dev_end = std::abs(ratio - 1.0);
        }
        bool ok = dev_end <= 0.01;
        all = all && ok;
        r.check(ok, "n=" + std::to_string(n) +
                        ": |scaled density / limit constant - 1| at t=30 is " +
                        detail::fmt(dev_end) + " (need <= 0.01)");
        r.note("  relative deviation along t: " + traj);
    }
    if (!all)
        r.note("deviation decays like 0.44 e^{-0.118 t}: 1% is first reached near t=32, "
               "so the t=30 target is unattainable for the exact distribution");
    return r;
}

// --- 5: pre-peak expansion on the ray t = n/2 ------------------------------
inline CriterionResult criterion_05(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "05_ridge";
    ModelParams P;
    P.rho = 1.0;
    std::vector<int> ns = quick ? std::vector<int>{100, 200}
                                : std::vector<int>{100, 200, 400};
    std::vector<double> errs;
    for (int n : ns) {
        double t = 0.5 * n;
        RegimeValue rv = approx_fixed_rho(P, n, t);
        double ode = integrate_density(P, n, {t})[0];
        double re = detail::rel_err(rv.value, ode);
        errs.push_back(re);
        r.note("n=" + std::to_string(n) + " regime " + rv.regime + ": rel err " +
               detail::fmt(re));
    }
    r.check(errs[1] <= 0.02, "rel err at n=200 <= 2%: " + detail::fmt(errs[1]));
    bool mono = true;
    for (std::size_t i = 1; i < errs.size(); ++i) mono = mono && errs[i] < errs[i - 1];
    r.check(mono, "error shrinks monotonically along the n grid");
    return r;
}

// --- 6: heavy traffic, diffusion scale -------------------------------------
inline CriterionResult criterion_06(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "06_heavy_traffic";
    const double rho = 100.0;
    ModelParams P;
    P.rho = rho;
    const int n = 100;  // N = 1
    std::vector<double> Ts = quick ? std::vector<double>{1.0}
                                   : std::vector<double>{0.5, 1.0, 2.0};
    std::vector<double> ts;
    for (double T : Ts) ts.push_back(rho * T);
    std::vector<double> p = integrate_density(P, n, ts);
    bool lead_ok = true, corr_ok = true;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        double lead = std::abs(rho * p[i] - std::exp(-Ts[i]));
        double corr = std::abs(rho * p[i] - std::exp(-Ts[i]) -
                               heavy_p1(1.0, Ts[i]) / rho);
        lead_ok = lead_ok && (lead <= 3.0 / rho);
        corr_ok = corr_ok && (corr < lead);
        r.note("T=" + detail::fmt(Ts[i]) + ": |rho p - e^{-T}| = " + detail::fmt(lead) +
               ", with correction " + detail::fmt(corr));
    }
    r.check(lead_ok, "|rho p_ode - e^{-T}| <= 3/rho at every T");
    r.check(corr_ok, "first-order correction reduces the error at every T");
    double w_p0 = 0.0;
    for (double N : {0.5, 1.0, 1.25, 2.0, 5.0})
        w_p0 = std::max(w_p0, std::abs(heavy_p0(N, 0.0) - 1.0 / N));
    r.check(w_p0 <= 1e-12, "P_0(N,0) = 1/N exactly, worst abs err " + detail::fmt(w_p0));
    double nc = heavy_critical_n();
    r.check(std::abs(nc - 1.2784) <= 1e-3,
            "critical N root = " + detail::fmt(nc) + " (1.2784 +- 1e-3)");
    return r;
}

// --- 7: heavy traffic, short-time boundary layer ---------------------------
inline CriterionResult criterion_07(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "07_heavy_short";
    const double rho = 100.0;
    ModelParams P;
    P.rho = rho;
    std::vector<int> ns = quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 3};
    std::vector<double> taus = quick ? std::vector<double>{0.5}
                                     : std::vector<double>{0.5, 2.0};
    double worst = 0.0;
    for (int n : ns) {
        for (double tau : taus) {
            double ode = integrate_density(P, n, {tau / rho})[0];
            double qn = heavy_qn(n, tau);
            worst = std::max(worst, std::abs(ode - qn));
        }
    }
    r.check(worst <= 5.0 / rho,
            "|p_ode(tau/rho) - Q_n(tau)| <= 5/rho, worst " + detail::fmt(worst));
    return r;
}

// --- 8: light traffic ------------------------------------------------------
inline CriterionResult criterion_08(bool quick, std::uint64_t) {
    CriterionResult r;
    r.id = "08_light_traffic";
    const double rho = 0.01;
    ModelParams P;
    P.rho = rho;
    std::vector<int> ns = quick ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 3};
    std::vector<double> ts = quick ? std::vector<double>{0.5, 1.0}
                                   : std::vector<double>{0.5, 1.0, 2.0};
    double worst = 0.0;
    for (int n : ns) {
        std::vector<double> p = integrate_density(P, n, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double two = light_p0(n, ts[i]) + rho * light_p1(n, ts[i]);
            worst = std::max(worst, std::abs(p[i] - two));
        }
    }
    r.check(worst <= 5.0 * rho * rho,
            "|p_ode - (p0 + rho p1)| <= 5 rho^2, worst " + detail::fmt(worst));
    double w_id = 0.0;
    for (double t : ts) {
        double lhs = -light_p0(0, t) + light_p0(1, t) + light_p1(0, t);
        double rhs = std::exp(-t) * (t * t - 2.0) / 4.0;
        w_id = std::max(w_id, std::abs(lhs - rhs));
    }
    r.check(w_id <= 1e-12,
            "stationary first-order identity holds to 1e-12, worst " + detail::fmt(w_id));
    return r;
}

// --- 9: processor-sharing / random-order equivalence ------------------------
inline CriterionResult criterion_09(bool quick, std::uint64_t seed) {
    CriterionResult r;
    r.id = "09_simulation";
    const double rho = 1.0;
    const double catom = std::exp(-rho);
    const double cmix = 1.0 - catom;  // tail proportionality constant
    long long reps = quick ? 30000 : 1000000;
    long long ks_reps = quick ? 8000 : 100000;

    SimConfig base;
    base.rho = rho;
    base.reps = reps;
    base.t_points = {1.0, 2.0, 4.0};

    SimConfig cv = base;
    cv.seed = seed;
    cv.stationary = true;
    SimOutcome V = simulate_ps_unconditional(cv);

    SimConfig cw = base;
    cw.seed = seed + 1;
    SimOutcome W = simulate_ros(cw);

    SimConfig cj = base;
    cj.seed = seed + 2;
    SimOutcome J = simulate_ps_joining(cj);

    bool stated_ok = true, biased_ok = true;
    for (std::size_t i = 0; i < base.t_points.size(); ++i) {
        double se_w = W.half_width[i] / kZ995;
        double se_v = V.half_width[i] / kZ995;
        double se_j = J.half_width[i] / kZ995;
        double d_stated = W.tail_hat[i] - cmix * V.tail_hat[i];
        double bound_stated =
            kZ995 * std::sqrt(se_w * se_w + cmix * cmix * se_v * se_v);
        double d_biased = W.tail_hat[i] - cmix * J.tail_hat[i];
        double bound_biased =
            kZ995 * std::sqrt(se_w * se_w + cmix * cmix * se_j * se_j);
        stated_ok = stated_ok && (std::abs(d_stated) <= bound_stated);
        biased_ok = biased_ok && (std::abs(d_biased) <= bound_biased);
        r.note("t=" + detail::fmt(base.t_points[i]) +
               ": W tail - (1-e^-rho) V tail = " + detail::fmt(d_stated) +
               " (99% bound " + detail::fmt(bound_stated) + ")");
    }
    r.check(stated_ok,
            "stationary tails: W vs (1-e^-rho) V with V drawn Poisson, joint 99% CI");
    if (!stated_ok) {
        r.note("the proportionality law holds for the sojourn of a customer who joins");
        r.note("(initial-state weights Poisson thinned by the joining probability),");
        r.note("not for the plain-Poisson mixture; cross-check with joining-view draw:");
        r.check(biased_ok,
                "diagnostic: W vs (1-e^-rho) V with joining-view draw, joint 99% CI");
    }

    SimConfig ch = base;
    ch.seed = seed + 3;
    ch.reps = ks_reps;
    ch.condition_view = 3;  // waits of joins that saw 3 in system
    ch.keep_samples = true;
    SimOutcome H = simulate_ros(ch);
    SimConfig cc = base;
    cc.seed = seed + 4;
    cc.reps = ks_reps;
    cc.n0 = 2;
    cc.keep_samples = true;
    SimOutcome C = simulate_ps_conditional(cc);
    double D = ks_two_sample(H.samples, C.samples);
    double crit = ks_critical_1pct(H.samples.size(), C.samples.size());
    r.check(D <= crit, "two-sample KS, conditional wait vs sojourn at 2 others: D = " +
                           detail::fmt(D) + " (1% critical " + detail::fmt(crit) + ")");

    double atom_se = std::sqrt(catom * (1.0 - catom) / static_cast<double>(reps));
    double atom_dev = std::abs(W.zero_fraction - catom);
    r.check(atom_dev <= kZ995 * atom_se,
            "zero-wait atom: " + detail::fmt(W.zero_fraction) + " vs e^-1 (99% hw " +
                detail::fmt(kZ995 * atom_se) + ")");
    return r;
}

inline const std::vector<std::string>& criterion_ids() {
    static const std::vector<std::string> ids = {
        "01_moments",      "02_mass",        "03_transform",
        "04_tail_law",     "05_ridge",       "06_heavy_traffic",
        "07_heavy_short",  "08_light_traffic", "09_simulation"};
    return ids;
}

inline CriterionResult run_criterion(const std::string& id, bool quick,
                                     std::uint64_t seed) {
    if (id == "01_moments") return criterion_01(quick, seed);
    if (id == "02_mass") return criterion_02(quick, seed);
    if (id == "03_transform") return criterion_03(quick, seed);
    if (id == "04_tail_law") return criterion_04(quick, seed);
    if (id == "05_ridge") return criterion_05(quick, seed);
    if (id == "06_heavy_traffic") return criterion_06(quick, seed);
    if (id == "07_heavy_short") return criterion_07(quick, seed);
    if (id == "08_light_traffic") return criterion_08(quick, seed);
    if (id == "09_simulation") return criterion_09(quick, seed);
    throw domain_error("unknown criterion id");
}

}  // namespace balking_ps::acceptance
