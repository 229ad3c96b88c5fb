#pragma once

// Shared vocabulary types, error handling, and small numeric helpers for the
// processor-sharing sojourn-time library.  Header-only; everything lives in
// namespace balking_ps.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace balking_ps {

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

// Invalid argument to a numeric routine (wrong domain, NaN input, bad config).
class domain_error : public std::invalid_argument {
 public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A series or iteration failed to converge within its configured budget.
// Carries the best partial value so callers can still inspect it.
class convergence_error : public std::runtime_error {
 public:
    convergence_error(const std::string& what, double partial, double err_est)
        : std::runtime_error(what), partial_value(partial), error_estimate(err_est) {}
    double partial_value;
    double error_estimate;
};

inline void require(bool ok, const char* msg) {
    if (!ok) throw domain_error(msg);
}

// ---------------------------------------------------------------------------
// model parameters
// ---------------------------------------------------------------------------

// Parameters of the processor-sharing model with joining probability
// 1/(n+1) when n customers are present; service rate is fixed at 1 and the
// arrival rate is rho.
struct ModelParams {
    double rho = 1.0;        // arrival rate, > 0
    double tol = 1e-10;      // relative accuracy target, (0, 1e-2)
    int m_cap = 2'000'000;   // hard cap on eigenvalue pairs per series

    void validate() const {
        require(std::isfinite(rho) && rho > 0.0, "rho must be finite and > 0");
        require(std::isfinite(tol) && tol > 0.0 && tol < 1e-2,
                "tol must lie in (0, 1e-2)");
        require(m_cap >= 8, "m_cap must be at least 8");
    }
};

// ---------------------------------------------------------------------------
// result types
// ---------------------------------------------------------------------------

enum class Method { spectral, ode, asymptotic, simulate, transform };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::spectral:   return "spectral";
        case Method::ode:        return "ode";
        case Method::asymptotic: return "asymptotic";
        case Method::simulate:   return "simulate";
        case Method::transform:  return "transform";
    }
    return "?";
}

// A single density/tail evaluation together with how it was produced and a
// (rough, one-sided-safe) error estimate.
struct DensityResult {
    double value = 0.0;
    Method method = Method::spectral;
    double err_est = 0.0;    // >= 0
    int terms_used = 0;

    void check_invariants() const {
        require(err_est >= 0.0, "err_est must be nonnegative");
        require(value >= -err_est, "density value below -err_est");
    }
};

// ---------------------------------------------------------------------------
// numeric helpers
// ---------------------------------------------------------------------------

// Compensated (Kahan) accumulator for long alternating-magnitude sums.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

inline bool close_rel(double a, double b, double rtol, double atol = 0.0) {
    return std::abs(a - b) <= rtol * std::max(std::abs(a), std::abs(b)) + atol;
}

// log(1e200): scaling quantum used by the backward-recurrence eigenfunction
// evaluator to dodge overflow without losing the exponent.
inline constexpr double kRescaleLog = 460.51701859880913680359829093687;
inline constexpr double kRescaleHi = 1e200;
inline constexpr double kRescaleLo = 1e-200;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace balking_ps
