#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>

#include "balking_ps/master_ode.hpp"
#include "balking_ps/simulate.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
namespace bps = balking_ps;

namespace {
double mean_closed(double rho, int n) { return 0.5 * (n + rho) + 1.0; }
double second_closed(double rho, int n) {
    return n * n / 3.0 + 5.0 * (rho + 2.0) / 6.0 * n + 5.0 * rho * rho / 6.0 +
           3.0 * rho + 2.0;
}
}  // namespace

TEST_CASE("identical configurations reproduce identical outcomes") {
    bps::SimConfig cfg;
    cfg.rho = 1.3;
    cfg.n0 = 2;
    cfg.reps = 40000;
    cfg.seed = 42;
    cfg.t_points = {0.5, 1.5, 3.0};
    bps::SimOutcome a = bps::simulate_ps_conditional(cfg);
    bps::SimOutcome b = bps::simulate_ps_conditional(cfg);
    REQUIRE(a.mean == b.mean);
    REQUIRE(a.second_moment == b.second_moment);
    REQUIRE(a.zero_fraction == b.zero_fraction);
    REQUIRE(a.tail_hat == b.tail_hat);
    REQUIRE(a.half_width == b.half_width);
    REQUIRE(a.reps_used == cfg.reps);

    // The merged result may not depend on how many workers executed it.
    setenv("BALKING_PS_THREADS", "3", 1);
    bps::SimOutcome c = bps::simulate_ps_conditional(cfg);
    setenv("BALKING_PS_THREADS", "1", 1);
    bps::SimOutcome d = bps::simulate_ps_conditional(cfg);
    unsetenv("BALKING_PS_THREADS");
    REQUIRE(c.mean == a.mean);
    REQUIRE(d.mean == a.mean);
    REQUIRE(c.tail_hat == a.tail_hat);
    REQUIRE(d.tail_hat == a.tail_hat);

    // A different seed must actually change the draw.
    cfg.seed = 43;
    bps::SimOutcome e = bps::simulate_ps_conditional(cfg);
    REQUIRE(e.mean != a.mean);
}

TEST_CASE("conditional moments sit within three standard errors of the closed forms") {
    for (double rho : {0.5, 1.0, 2.0}) {
        for (int n0 : {0, 2, 5}) {
            bps::SimConfig cfg;
            cfg.rho = rho;
            cfg.n0 = n0;
            cfg.reps = 1000000;
            cfg.seed = 7;
            bps::SimOutcome out = bps::simulate_ps_conditional(cfg);
            INFO("rho = " << rho << ", n0 = " << n0 << ", mean = " << out.mean
                          << " +- " << out.mean_se);
            REQUIRE(std::abs(out.mean - mean_closed(rho, n0)) <= 3.0 * out.mean_se);
            REQUIRE(std::abs(out.second_moment - second_closed(rho, n0)) <=
                    3.0 * out.second_moment_se);
            REQUIRE(out.truncated == 0);
        }
    }
}

TEST_CASE("empirical tails are valid survival functions and match the exact tail") {
    bps::SimConfig cfg;
    cfg.rho = 1.0;
    cfg.n0 = 0;
    cfg.reps = 400000;
    cfg.seed = 11;
    cfg.t_points = {0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0};
    bps::SimOutcome out = bps::simulate_ps_conditional(cfg);
    double prev = 1.0;
    for (double v : out.tail_hat) {
        REQUIRE(v >= 0.0);
        REQUIRE(v <= prev);
        prev = v;
    }
    bps::ModelParams P;
    P.rho = 1.0;
    std::vector<double> exact = bps::integrate_tail(P, 0, cfg.t_points);
    for (std::size_t i = 0; i < cfg.t_points.size(); ++i) {
        INFO("t = " << cfg.t_points[i] << ": " << out.tail_hat[i] << " vs "
                    << exact[i] << " (hw " << out.half_width[i] << ")");
        REQUIRE(std::abs(out.tail_hat[i] - exact[i]) <= out.half_width[i]);
    }
}

TEST_CASE("stationary-arrival simulation reproduces the mixture mean") {
    bps::SimConfig cfg;
    cfg.rho = 1.0;
    cfg.stationary = true;
    cfg.reps = 400000;
    cfg.seed = 3;
    bps::SimOutcome out = bps::simulate_ps_unconditional(cfg);
    // E[(n + rho)/2 + 1] over n ~ Poisson(rho) is rho + 1.
    double want = cfg.rho + 1.0;
    INFO("mean = " << out.mean << " +- " << out.mean_se);
    REQUIRE(std::abs(out.mean - want) <= 3.0 * out.mean_se);
}

TEST_CASE("random-order service produces the balking atom at zero") {
    bps::SimConfig cfg;
    cfg.rho = 1.0;
    cfg.reps = 150000;
    cfg.seed = 19;
    cfg.t_points = {1.0};
    bps::SimOutcome out = bps::simulate_ros(cfg);
    double p = std::exp(-1.0);
    double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.reps));
    INFO("atom = " << out.zero_fraction << ", want " << p << " +- " << 2.5758 * se);
    REQUIRE(std::abs(out.zero_fraction - p) <= bps::kZ995 * se);
    REQUIRE_FALSE(out.warmup_warning);
}

TEST_CASE("insufficient warm-up is detected by the two-window comparison") {
    bps::SimConfig cfg;
    cfg.rho = 1.0;
    cfg.reps = 30000;
    cfg.seed = 23;
    cfg.warmup = 2.0;  // far below the default 50 time units
    cfg.t_points = {1.0};
    bps::SimOutcome out = bps::simulate_ros(cfg);
    REQUIRE(out.warmup_warning);
}

TEST_CASE("a conditioned random-order wait matches the matching shared run") {
    // Waits of joins that found three in system against sojourns that start
    // with two others: equal in distribution, checked with two-sample KS.
    bps::SimConfig ros;
    ros.rho = 1.0;
    ros.reps = 20000;
    ros.seed = 29;
    ros.condition_view = 3;
    ros.keep_samples = true;
    bps::SimOutcome W = bps::simulate_ros(ros);

    bps::SimConfig ps;
    ps.rho = 1.0;
    ps.reps = 20000;
    ps.seed = 31;
    ps.n0 = 2;
    ps.keep_samples = true;
    bps::SimOutcome V = bps::simulate_ps_conditional(ps);

    double d = bps::ks_two_sample(W.samples, V.samples);
    double crit = bps::ks_critical_1pct(W.samples.size(), V.samples.size());
    INFO("KS D = " << d << ", 1% critical " << crit);
    REQUIRE(d <= crit);
}

TEST_CASE("KS helpers behave on degenerate inputs") {
    std::vector<double> a{0.1, 0.4, 0.7, 1.3};
    REQUIRE(bps::ks_two_sample(a, a) == 0.0);
    std::vector<double> lo{0.1, 0.2, 0.3};
    std::vector<double> hi{5.0, 6.0, 7.0};
    REQUIRE(bps::ks_two_sample(lo, hi) == 1.0);
    REQUIRE_THAT(bps::ks_critical_1pct(100000, 100000),
                 WithinRel(1.6276 * std::sqrt(2.0 / 100000.0), 1e-12));
}

TEST_CASE("equivalence constants for the three canonical joining rules") {
    // Harmonic joining probabilities at unit load: e/(e - 1).
    double c1 = bps::equivalence_constant(
        1.0, [](int n) { return 1.0 / (n + 1.0); });
    REQUIRE_THAT(c1, WithinRel(std::exp(1.0) / (std::exp(1.0) - 1.0), 1e-12));

    // Finite room for three waiting customers at rho = 1/2.
    double rho = 0.5;
    double c2 = bps::equivalence_constant(
        rho, [](int n) { return n <= 2 ? 1.0 : 0.0; });
    double want2 = (1.0 - std::pow(rho, 4)) / (rho * (1.0 - std::pow(rho, 3)));
    REQUIRE_THAT(c2, WithinRel(want2, 1e-12));

    // No balking below capacity one: 1/rho.
    double c3 = bps::equivalence_constant(0.5, [](int) { return 1.0; });
    REQUIRE_THAT(c3, WithinRel(2.0, 1e-12));

    // The no-balking series diverges at rho >= 1 and must be reported.
    REQUIRE_THROWS_AS(bps::equivalence_constant(1.0, [](int) { return 1.0; }),
                      bps::domain_error);
}

TEST_CASE("tiny horizons are rejected as unusable truncation") {
    bps::SimConfig cfg;
    cfg.rho = 1.0;
    cfg.n0 = 0;
    cfg.reps = 5000;
    cfg.seed = 37;
    cfg.horizon = 0.05;
    REQUIRE_THROWS_AS(bps::simulate_ps_conditional(cfg), bps::convergence_error);
}

TEST_CASE("invalid simulation configurations are rejected") {
    bps::SimConfig cfg;
    cfg.rho = -1.0;
    REQUIRE_THROWS_AS(bps::simulate_ps_conditional(cfg), bps::domain_error);
    cfg.rho = 1.0;
    cfg.reps = 0;
    REQUIRE_THROWS_AS(bps::simulate_ps_conditional(cfg), bps::domain_error);
    cfg.reps = 1000;
    cfg.n0 = -2;
    REQUIRE_THROWS_AS(bps::simulate_ps_conditional(cfg), bps::domain_error);
}
