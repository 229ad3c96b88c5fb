// Asymptotic-regime tour: for light, moderate, and heavy load, compare the
// published closed-form approximations against the exact initial-value solver
// at representative (n, t) points.

#include <cstdio>

#include "balking_ps/asymptotics.hpp"
#include "balking_ps/master_ode.hpp"

namespace bps = balking_ps;

static void report(double rho, int n, double t) {
    bps::ModelParams P;
    P.rho = rho;
    double exact = bps::integrate_density(P, n, {t})[0];

    double approx = 0.0;
    std::string regime;
    if (rho <= 0.1) {
        bps::RegimeValue rv = bps::approx_light_traffic(P, n, t);
        approx = rv.value;
        regime = rv.regime;
    } else if (rho >= 10.0) {
        if (rho * t <= 10.0) {
            approx = bps::heavy_qn(n, rho * t);
            regime = "heavy-short";
        } else {
            approx = bps::heavy_density(P, n, t);
            regime = "heavy";
        }
    } else {
        bps::RegimeValue rv = bps::approx_fixed_rho(P, n, t);
        approx = rv.value;
        regime = rv.regime;
    }
    std::printf("rho %7.2f  n %4d  t %8.3f  %-14s  approx %12.6e  exact %12.6e"
                "  rel.err %8.2e\n",
                rho, n, t, regime.c_str(), approx, exact,
                std::abs(approx - exact) / exact);
}

int main() {
    std::printf("light load: two-term expansion in rho\n");
    report(0.01, 0, 0.5);
    report(0.01, 1, 1.0);
    report(0.01, 3, 2.0);

    std::printf("\nmoderate load: large-time expansion cases\n");
    report(1.0, 0, 30.0);
    report(1.0, 200, 100.0);

    std::printf("\nheavy load: boundary layer, then diffusion scale\n");
    report(100.0, 0, 0.005);
    report(100.0, 3, 0.02);
    report(100.0, 100, 100.0);
    report(100.0, 100, 200.0);
    return 0;
}
