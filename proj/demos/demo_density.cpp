// Minimal library walkthrough: evaluate the conditional sojourn density and
// tail for a customer who joined with two others present, three ways (series,
// initial-value solver, Monte Carlo), and print them side by side.

#include <cstdio>

#include "balking_ps/master_ode.hpp"
#include "balking_ps/simulate.hpp"
#include "balking_ps/spectral.hpp"

int main() {
    namespace bps = balking_ps;
    bps::ModelParams P;
    P.rho = 1.0;  // arrival rate; the service rate is fixed at 1
    const int n = 2;

    std::vector<double> ts{0.5, 1.0, 2.0, 4.0, 8.0};

    bps::SimConfig cfg;
    cfg.rho = P.rho;
    cfg.n0 = n;
    cfg.reps = 200000;
    cfg.seed = 1;
    cfg.t_points = ts;
    bps::SimOutcome sim = bps::simulate_ps_conditional(cfg);

    std::vector<double> ode_p = bps::integrate_density(P, n, ts);
    std::vector<double> ode_v = bps::integrate_tail(P, n, ts);

    std::printf("sojourn of a join seeing %d others, rho = %.1f\n", n, P.rho);
    std::printf("%6s  %12s  %12s  %12s  %12s  %22s\n", "t", "p (series)",
                "p (ode)", "V (series)", "V (ode)", "V (simulated, 99%)");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double ps = bps::conditional_density(P, n, ts[i]).value;
        double vs = bps::conditional_tail(P, n, ts[i]).value;
        std::printf("%6.2f  %12.8f  %12.8f  %12.8f  %12.8f  %12.8f +- %8.6f\n",
                    ts[i], ps, ode_p[i], vs, ode_v[i], sim.tail_hat[i],
                    sim.half_width[i]);
    }

    std::printf("\nmoments: mean %10.8f (closed %.3f), second %11.8f (closed %.3f)\n",
                bps::mean_sojourn_series(P, n), 0.5 * (n + P.rho) + 1.0,
                bps::second_moment_series(P, n),
                n * n / 3.0 + 5.0 * (P.rho + 2.0) / 6.0 * n +
                    5.0 * P.rho * P.rho / 6.0 + 3.0 * P.rho + 2.0);
    return 0;
}
