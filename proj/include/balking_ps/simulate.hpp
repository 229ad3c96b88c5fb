#pragma once

// Event-driven stochastic simulation of the tagged customer.
//
// Conditional dynamics (shared by the processor-sharing sojourn and the
// random-order-of-service wait, which coincide in distribution here): with k
// other customers competing, the tagged customer finishes at rate 1/(k+1),
// one of the others departs at rate k/(k+1), and an accepted arrival joins at
// rate rho/(k+1).
//
// The stationary-arrival variants differ only in how the initial k is drawn:
//  * simulate_ps_unconditional draws k ~ Poisson(rho) (the distribution seen
//    by an arrival in the processor-sharing system);
//  * simulate_ros runs the service-in-random-order environment to
//    stationarity, lets an arriving customer balk with the complementary
//    joining probability (join certainly when idle, with probability 1/j
//    when j are present), records a zero wait for a join into an idle
//    system, and otherwise hands the joiner to the conditional dynamics.
//
// Randomness is a counter-based generator (splitmix64 finalizer over an
// affine counter), one independent stream per replication, so results are
// bit-for-bit reproducible for a given seed regardless of thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "balking_ps/common.hpp"

namespace balking_ps {

// ---------------------------------------------------------------------------
// counter-based RNG
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace detail

// Stateless-stream RNG: the i-th variate of a stream is a pure function of
// (key, i).  Streams for different replications never collide in practice
// (the key is a 64-bit hash of seed and replication index).
class CounterRng {
 public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    static CounterRng for_rep(std::uint64_t seed, std::uint64_t rep) {
        return CounterRng(detail::mix64(seed ^ detail::mix64((rep + 1) * detail::kGolden)));
    }

    // uniform on (0, 1), never exactly 0 or 1
    double uniform() {
        std::uint64_t z = detail::mix64(key_ + (++ctr_) * detail::kGolden);
        return static_cast<double>(z >> 11) * 0x1p-53 + 0x1p-54;
    }

    double exponential() { return -std::log(uniform()); }

    int poisson(double mean) {
        double u = uniform();
        double p = std::exp(-mean);
        double cum = p;
        int k = 0;
        int cap = static_cast<int>(20.0 * (mean + 10.0));
        while (u > cum && k < cap) {
            ++k;
            p *= mean / k;
            cum += p;
        }
        return k;
    }

 private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

// ---------------------------------------------------------------------------
// configuration and results
// ---------------------------------------------------------------------------

enum class Discipline { ps, ros };

struct SimConfig {
    double rho = 1.0;
    int n0 = 0;               // initial number of others (conditional runs)
    bool stationary = false;  // draw n0 ~ Poisson(rho) instead
    long long reps = 100000;
    double horizon = 0.0;     // 0 => 50 (n0 + rho + 1) per replication
    std::uint64_t seed = 1;
    Discipline discipline = Discipline::ps;
    bool keep_samples = false;
    std::vector<double> t_points;  // where tail estimates are wanted
    double warmup = 0.0;      // environment warm-up time; 0 => 50 / min(1, rho)
    int condition_view = -1;  // ros only: require the join to see this many

    void validate() const {
        require(std::isfinite(rho) && rho > 0.0, "simulate: rho must be > 0");
        require(reps >= 1, "simulate: reps must be >= 1");
        require(n0 >= 0, "simulate: n0 must be >= 0");
        require(horizon >= 0.0, "simulate: horizon must be >= 0");
    }
};

struct SimOutcome {
    std::vector<double> t_points;
    std::vector<double> tail_hat;     // P[sojourn > t] estimates
    std::vector<double> half_width;   // 99% two-sided half-widths
    long long reps_used = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double second_moment = 0.0;
    double mean_se = 0.0;
    double second_moment_se = 0.0;
    double zero_fraction = 0.0;       // exact-zero samples (balking atom)
    long long truncated = 0;          // replications stopped at the horizon
    bool warmup_warning = false;      // burn-in window means disagree (ros)
    std::vector<double> samples;      // filled when keep_samples is set
};

inline constexpr double kZ995 = 2.5758293035489004;  // 99% two-sided normal

// ---------------------------------------------------------------------------
// single-replication kernels
// ---------------------------------------------------------------------------

namespace detail {

// Conditional tagged-customer run from k others; returns the sojourn, or the
// horizon with `truncated` set.
inline double run_conditional(double rho, int k, double horizon, CounterRng& rng,
                              bool& truncated) {
    double t = 0.0;
    for (;;) {
        double rate = 1.0 + rho / (k + 1.0);
        t += rng.exponential() / rate;
        if (t > horizon) {
            truncated = true;
            return horizon;
        }
        double u = rng.uniform() * (k + 1.0 + rho);
        if (u < 1.0) return t;        // tagged customer finishes
        if (u < k + 1.0) --k;         // one of the others departs
        else ++k;                     // accepted arrival joins
    }
}

// Service-in-random-order environment: j customers present; arrivals at rate
// rho join certainly when j = 0 and with probability 1/j otherwise; service
// completions at rate 1.  Returns the system size seen by a tagged arrival
// placed at the deterministic end of the warm-up window (conditioned, when
// view >= 0, on seeing exactly `view` customers; rejected placements retry
// after another half warm-up so the system forgets the rejection).
//
// The tag must NOT go to the first arrival after the warm-up: the gap from
// the warm-up end to that arrival contains no joins by construction, so the
// queue drains during it and the tagged view is biased empty (the waiting
// paradox).  A Poisson stream can instead be probed at a fixed time: the
// state there is time-stationary, which is exactly what an arrival sees.
//
// The occupancy time-integral over each half of the warm-up window is
// accumulated into w1/w2 so the caller can flag an unconverged burn-in by
// comparing the two window means.
inline int ros_environment_join_view(double rho, double warmup, int view,
                                     CounterRng& rng, double& w1, double& w2) {
    int j = rng.poisson(rho);  // roughly stationary start, then burn in
    double t = 0.0;
    const double half = 0.5 * warmup;
    double target = warmup;
    for (;;) {
        double rate = rho + (j > 0 ? 1.0 : 0.0);
        double t1 = t + rng.exponential() / rate;
        if (t < half) w1 += j * (std::min(t1, half) - t);
        if (t1 > half && t < warmup)
            w2 += j * (std::min(t1, warmup) - std::max(t, half));
        while (t1 >= target) {
            // virtual tagged arrival at `target` (state is j on [t, t1))
            bool joins = (j == 0) || (rng.uniform() * j < 1.0);
            if (joins && (view < 0 || j == view)) return j;
            target += half;
        }
        t = t1;
        double u = rng.uniform() * rate;
        if (u < rho) {
            // arrival proposal
            bool joins = (j == 0) || (rng.uniform() * j < 1.0);
            if (joins) ++j;
        } else {
            --j;
        }
    }
}

struct ChunkStats {
    std::vector<long long> above;  // per t_point: samples strictly above
    double sum = 0.0;
    double sum_sq = 0.0;
    double sum_4 = 0.0;            // for the SE of the second moment
    double env_w1 = 0.0;           // warm-up occupancy integrals (ros)
    double env_w2 = 0.0;
    long long zeros = 0;
    long long truncated = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

namespace detail {

inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = (hw == 0) ? 1 : static_cast<int>(hw);
    if (const char* cap = std::getenv("BALKING_PS_THREADS")) {
        int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

template <class RepFn>
SimOutcome run_replications(const SimConfig& cfg, RepFn&& one_rep) {
    cfg.validate();
    const long long reps = cfg.reps;
    const long long chunk = 4096;
    const long long n_chunks = (reps + chunk - 1) / chunk;
    std::vector<ChunkStats> stats(n_chunks);
    std::vector<double> samples;
    if (cfg.keep_samples) samples.resize(reps);

    auto work = [&](long long c) {
        ChunkStats& s = stats[c];
        s.above.assign(cfg.t_points.size(), 0);
        long long lo = c * chunk, hi = std::min(reps, lo + chunk);
        for (long long rep = lo; rep < hi; ++rep) {
            CounterRng rng = CounterRng::for_rep(cfg.seed, static_cast<std::uint64_t>(rep));
            bool trunc = false;
            double x = one_rep(rng, trunc, s.env_w1, s.env_w2);
            if (trunc) ++s.truncated;
            if (x == 0.0) ++s.zeros;
            s.sum += x;
            s.sum_sq += x * x;
            s.sum_4 += x * x * x * x;
            for (std::size_t i = 0; i < cfg.t_points.size(); ++i)
                if (x > cfg.t_points[i]) ++s.above[i];
            if (cfg.keep_samples) samples[rep] = x;
        }
    };

    int threads = std::min<long long>(thread_budget(), n_chunks);
    if (threads <= 1) {
        for (long long c = 0; c < n_chunks; ++c) work(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long long> next{0};
        for (int i = 0; i < threads; ++i)
            pool.emplace_back([&]() {
                for (;;) {
                    long long c = next.fetch_add(1);
                    if (c >= n_chunks) return;
                    work(c);
                }
            });
        for (auto& th : pool) th.join();
    }

    // deterministic sequential reduction in chunk order
    SimOutcome out;
    out.t_points = cfg.t_points;
    out.reps_used = reps;
    out.seed = cfg.seed;
    out.samples = std::move(samples);
    std::vector<long long> above(cfg.t_points.size(), 0);
    double sum = 0.0, sum_sq = 0.0, sum_4 = 0.0, w1 = 0.0, w2 = 0.0;
    long long zeros = 0;
    for (const ChunkStats& s : stats) {
        for (std::size_t i = 0; i < above.size(); ++i) above[i] += s.above[i];
        sum += s.sum;
        sum_sq += s.sum_sq;
        sum_4 += s.sum_4;
        w1 += s.env_w1;
        w2 += s.env_w2;
        zeros += s.zeros;
        out.truncated += s.truncated;
    }
    double n = static_cast<double>(reps);
    out.zero_fraction = zeros / n;
    if (cfg.discipline == Discipline::ros && cfg.warmup > 0.0) {
        double m1 = w1 / (0.5 * cfg.warmup * n);
        double m2 = w2 / (0.5 * cfg.warmup * n);
        out.warmup_warning =
            std::abs(m1 - m2) > 0.05 * std::max(1.0, 0.5 * (m1 + m2));
    }
    out.mean = sum / n;
    out.second_moment = sum_sq / n;
    double var = std::max(0.0, sum_sq / n - out.mean * out.mean);
    out.mean_se = std::sqrt(var / n);
    double var2 = std::max(0.0, sum_4 / n - out.second_moment * out.second_moment);
    out.second_moment_se = std::sqrt(var2 / n);
    out.tail_hat.resize(above.size());
    out.half_width.resize(above.size());
    for (std::size_t i = 0; i < above.size(); ++i) {
        double p = above[i] / n;
        out.tail_hat[i] = p;
        out.half_width[i] = kZ995 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / n);
    }
    if (out.truncated > reps / 1000)
        throw convergence_error("simulation: truncated fraction exceeds 1e-3",
                                out.mean, static_cast<double>(out.truncated) / n);
    return out;
}

}  // namespace detail

// Sojourn-time simulation conditioned on n0 others at arrival.
inline SimOutcome simulate_ps_conditional(const SimConfig& cfg) {
    SimConfig c = cfg;
    c.discipline = Discipline::ps;
    double horizon = (c.horizon > 0.0) ? c.horizon : 50.0 * (c.n0 + c.rho + 1.0);
    return detail::run_replications(
        c, [&](CounterRng& rng, bool& trunc, double&, double&) {
            return detail::run_conditional(c.rho, c.n0, horizon, rng, trunc);
        });
}

// Sojourn-time simulation with the initial population drawn
// Poisson(rho) each replication.
inline SimOutcome simulate_ps_unconditional(const SimConfig& cfg) {
    SimConfig c = cfg;
    c.discipline = Discipline::ps;
    return detail::run_replications(
        c, [&](CounterRng& rng, bool& trunc, double&, double&) {
            int k = rng.poisson(c.rho);
            double horizon =
                (c.horizon > 0.0) ? c.horizon : 50.0 * (k + c.rho + 1.0);
            return detail::run_conditional(c.rho, k, horizon, rng, trunc);
        });
}

// Sojourn-time simulation with the initial population drawn from the law
// seen by customers who actually join (the Poisson arrival view thinned by
// the joining probability 1/(k+1)); used to cross-check the stationary
// sojourn/waiting mixture identities.
inline SimOutcome simulate_ps_joining(const SimConfig& cfg) {
    SimConfig c = cfg;
    c.discipline = Discipline::ps;
    return detail::run_replications(
        c, [&](CounterRng& rng, bool& trunc, double&, double&) {
            int k;
            for (;;) {
                k = rng.poisson(c.rho);
                if (rng.uniform() * (k + 1.0) < 1.0) break;
            }
            double horizon =
                (c.horizon > 0.0) ? c.horizon : 50.0 * (k + c.rho + 1.0);
            return detail::run_conditional(c.rho, k, horizon, rng, trunc);
        });
}

// Waiting-time simulation in the service-in-random-order system: the
// environment is burned in, an arrival that balks is not measured, a join
// into an idle system records a zero wait (the atom), and any other join
// hands the customer to the conditional dynamics with one fewer competitor
// than the system size it saw.
inline SimOutcome simulate_ros(const SimConfig& cfg) {
    SimConfig c = cfg;
    c.discipline = Discipline::ros;
    if (c.warmup <= 0.0) c.warmup = 50.0 / std::min(1.0, c.rho);
    return detail::run_replications(
        c, [&](CounterRng& rng, bool& trunc, double& w1, double& w2) {
            int view = detail::ros_environment_join_view(
                c.rho, c.warmup, c.condition_view, rng, w1, w2);
            if (view == 0) return 0.0;
            double horizon = (c.horizon > 0.0) ? c.horizon
                                               : 50.0 * (view + c.rho + 1.0);
            return detail::run_conditional(c.rho, view - 1, horizon, rng,
                                           trunc);
        });
}

// ---------------------------------------------------------------------------
// equivalence constant and goodness-of-fit helper
// ---------------------------------------------------------------------------

// The proportionality constant between the stationary processor-sharing
// sojourn tail and the service-in-random-order waiting tail,
//   C = (1/rho) (1 + sum_n rho^n b_0...b_{n-1}) / (1 + sum_n rho^n b_0...b_n),
// for an arbitrary joining-probability sequence b.  Throws convergence_error
// if the series have not settled after 1000 terms (divergent regime).
inline double equivalence_constant(double rho,
                                   const std::function<double(int)>& b) {
    require(rho > 0.0, "equivalence_constant: rho must be > 0");
    double num = 1.0, den = 1.0;
    double prod_shift = 1.0;   // b_0 ... b_{n-1}
    double pw = 1.0;           // rho^n
    for (int n = 1; n <= 1000; ++n) {
        double bn_minus1 = b(n - 1);
        require(bn_minus1 >= 0.0 && bn_minus1 <= 1.0,
                "equivalence_constant: b must map into [0, 1]");
        prod_shift *= bn_minus1;
        pw *= rho;
        double t_num = pw * prod_shift;
        double t_den = t_num * b(n);
        num += t_num;
        den += t_den;
        if (t_num < 1e-16 * num && t_den < 1e-16 * den)
            return num / (rho * den);
        if (prod_shift == 0.0) return num / (rho * den);
    }
    throw domain_error("equivalence_constant: series did not settle within "
                       "1000 terms (divergent regime)");
}

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    require(!a.empty() && !b.empty(), "ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    return d;
}

// Critical value scale for a two-sample KS test at the 1% level.
inline double ks_critical_1pct(std::size_t n, std::size_t m) {
    return 1.6276 * std::sqrt((static_cast<double>(n) + m) /
                              (static_cast<double>(n) * m));
}

}  // namespace balking_ps
