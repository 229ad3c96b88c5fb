// Command-line front end for the processor-sharing sojourn-time library.
//
// Subcommands: density, tail, moments, transform, asymptotic, simulate,
// validate.  Tabular results are emitted as CSV (default) or JSON; floats use
// shortest-round-trip formatting so identical runs give identical bytes.
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numeric
// failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "balking_ps/acceptance.hpp"
#include "balking_ps/asymptotics.hpp"
#include "balking_ps/format.hpp"
#include "balking_ps/master_ode.hpp"
#include "balking_ps/simulate.hpp"
#include "balking_ps/spectral.hpp"
#include "balking_ps/transform.hpp"

namespace bps = balking_ps;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchemaVersion = "1";

// All options across subcommands; each subcommand binds the subset it uses.
struct Opts {
    double rho = 1.0;
    std::string n = "0";
    std::string t;
    std::string theta;
    std::string method = "auto";
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 1;
    long long reps = 100000;
    double tol = 1e-10;
    std::string discipline = "ps";
    bool quick = false;
};

double t_switch(int n) { return 0.1 * (1.0 + n); }

double parse_number(const std::string& s, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw bps::domain_error(std::string(what) + ": not a number: " + s);
    }
    if (pos != s.size() || !std::isfinite(v))
        throw bps::domain_error(std::string(what) + ": not a finite number: " + s);
    return v;
}

// A point grid: either one value, or "start:stop:count" with inclusive
// endpoints, count >= 2, stop > start (so grids are strictly increasing).
std::vector<double> parse_grid(const std::string& spec, const char* what) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) return {parse_number(parts[0], what)};
    if (parts.size() != 3)
        throw bps::domain_error(std::string(what) +
                                ": expected VALUE or START:STOP:COUNT, got " + spec);
    double start = parse_number(parts[0], what);
    double stop = parse_number(parts[1], what);
    double countd = parse_number(parts[2], what);
    long long count = static_cast<long long>(countd);
    if (countd != static_cast<double>(count) || count < 2)
        throw bps::domain_error(std::string(what) + ": COUNT must be an integer >= 2");
    if (!(stop > start))
        throw bps::domain_error(std::string(what) + ": need STOP > START");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] =
            start + (stop - start) * static_cast<double>(i) /
                        static_cast<double>(count - 1);
    out.back() = stop;
    return out;
}

// Occupancy argument: a nonnegative integer, or "mix" for the
// stationary-arrival (Poisson-mixed) quantity.
std::optional<int> parse_n(const std::string& s) {
    if (s == "mix") return std::nullopt;
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw bps::domain_error("--n: expected a nonnegative integer or 'mix', got " + s);
    }
    if (pos != s.size() || v < 0)
        throw bps::domain_error("--n: expected a nonnegative integer or 'mix', got " + s);
    return static_cast<int>(v);
}

std::string cell_of(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return bps::to_shortest(v.get<double>());
    if (v.is_null()) return "nan";
    return v.dump();
}

void emit(const ordered_json& meta, const std::vector<std::string>& header,
          const std::vector<ordered_json>& records, const std::string& format,
          const std::string& output) {
    std::string text;
    if (format == "json") {
        ordered_json root;
        root["meta"] = meta;
        root["records"] = ordered_json::array();
        for (const auto& r : records) root["records"].push_back(r);
        text = root.dump(2);
        text += '\n';
    } else {
        bps::Table tab;
        tab.header = header;
        for (const auto& r : records) {
            std::vector<std::string> row;
            row.reserve(header.size());
            for (const auto& h : header) row.push_back(cell_of(r.at(h)));
            tab.rows.push_back(std::move(row));
        }
        std::ostringstream os;
        bps::write_csv(os, tab);
        text = os.str();
    }
    if (output.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw bps::domain_error("cannot open output file: " + output);
        f << text;
        if (!f) throw bps::domain_error("failed writing output file: " + output);
    }
}

ordered_json versions_json() {
    return ordered_json{{"balking_ps", kVersion}, {"schema", kSchemaVersion}};
}

// Regime routing for the asymptotic command: light scales for rho <= 0.1,
// queue scales for rho >= 10 (boundary-layer profile when rho*t is small,
// two-term diffusion answer otherwise), fixed-rho saddle/pole forms between.
bps::RegimeValue route_asymptotic(const bps::ModelParams& P,
                                  std::optional<int> n_opt, double t,
                                  std::string* coords) {
    auto kv = [](const char* k, double v) {
        return std::string(k) + "=" + bps::to_shortest(v);
    };
    bps::RegimeValue rv;
    if (!n_opt) {
        rv = bps::approx_unconditional(P, t);
        *coords = kv("rho", P.rho) + ";" + kv("t", t);
    } else if (P.rho <= 0.1) {
        rv = bps::approx_light_traffic(P, *n_opt, t);
        bps::LightTrafficCoords c = bps::light_coords(P.rho, *n_opt, t);
        *coords = kv("zeta", c.zeta) + ";" + kv("Omega", c.omega_big) + ";" +
                  kv("X", c.x_cap) + ";" + kv("Y", c.y_cap) + ";" +
                  kv("omega", c.omega);
    } else if (P.rho >= 10.0) {
        double tau = P.rho * t;
        if (tau <= 10.0) {
            rv.value = bps::heavy_qn(*n_opt, tau);
            rv.regime = "heavy-short";
        } else {
            rv.value = bps::heavy_density(P, *n_opt, t);
            rv.regime = "heavy";
        }
        bps::HeavyTrafficCoords c = bps::heavy_coords(P.rho, *n_opt, t);
        *coords = kv("N", c.n_cap) + ";" + kv("T", c.t_cap) + ";" +
                  kv("tau", c.tau) + ";" + kv("U", c.u) + ";" + kv("xi", c.xi) +
                  ";" + kv("eta", c.eta);
    } else {
        rv = bps::approx_fixed_rho(P, *n_opt, t);
        bps::FixedRhoCoords c = bps::fixed_rho_coords(P.rho, *n_opt, t);
        *coords = kv("ratio", c.ratio) + ";" + kv("delta", c.delta) + ";" +
                  kv("lam0", c.lam0) + ";" + kv("lam", c.lam) + ";" +
                  kv("r_star", c.r_star) + ";" + kv("theta_s", c.theta_s) + ";" +
                  kv("theta_p", c.theta_p);
    }
    if (rv.ambiguous && std::isfinite(rv.secondary))
        *coords += ";" + kv("secondary", rv.secondary);
    return rv;
}

ordered_json json_n(const std::optional<int>& n_opt) {
    if (n_opt) return *n_opt;
    return "mix";
}

// density and tail share everything except which curve they evaluate.
int run_point_command(bool want_tail, const Opts& o) {
    const char* cmd = want_tail ? "tail" : "density";
    bps::ModelParams P;
    P.rho = o.rho;
    P.tol = o.tol;
    P.validate();
    std::vector<double> pts = parse_grid(o.t, "--t");
    std::optional<int> n_opt = parse_n(o.n);

    if (!want_tail && o.method == "simulate")
        throw bps::domain_error(
            "density: method 'simulate' is not available (simulation estimates "
            "tails and moments, not point densities)");
    if (want_tail && o.method == "asymptotic")
        throw bps::domain_error(
            "tail: method 'asymptotic' is not available (asymptotic forms are "
            "densities; see the asymptotic command)");

    struct Row {
        double v = 0.0;
        double err = 0.0;
        const char* used = "";
    };
    std::vector<Row> rows(pts.size());

    if (o.method == "simulate") {
        bps::SimConfig cfg;
        cfg.rho = o.rho;
        cfg.reps = o.reps;
        cfg.seed = o.seed;
        cfg.t_points = pts;
        bps::SimOutcome out;
        if (n_opt) {
            cfg.n0 = *n_opt;
            out = bps::simulate_ps_conditional(cfg);
        } else {
            cfg.stationary = true;
            out = bps::simulate_ps_unconditional(cfg);
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            rows[i] = {out.tail_hat[i], out.half_width[i], "simulate"};
    } else if (o.method == "asymptotic") {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::string coords;
            bps::RegimeValue rv = route_asymptotic(P, n_opt, pts[i], &coords);
            rows[i] = {rv.value, std::numeric_limits<double>::quiet_NaN(),
                       "asymptotic"};
        }
    } else {
        int n_for_switch = n_opt ? *n_opt : 0;
        std::vector<double> ode_ts;
        std::vector<std::size_t> ode_idx;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool use_spectral =
                (o.method == "spectral") ||
                (o.method == "auto" && pts[i] >= t_switch(n_for_switch));
            if (!use_spectral) {
                ode_idx.push_back(i);
                ode_ts.push_back(pts[i]);
                continue;
            }
            bps::DensityResult dr;
            if (n_opt)
                dr = want_tail ? bps::conditional_tail(P, *n_opt, pts[i])
                               : bps::conditional_density(P, *n_opt, pts[i]);
            else
                dr = want_tail ? bps::unconditional_tail(P, pts[i])
                               : bps::unconditional_density(P, pts[i]);
            rows[i] = {dr.value, dr.err_est, "spectral"};
        }
        if (!ode_ts.empty()) {
            std::vector<double> vals;
            if (n_opt) {
                vals = want_tail ? bps::integrate_tail(P, *n_opt, ode_ts)
                                 : bps::integrate_density(P, *n_opt, ode_ts);
            } else {
                vals.reserve(ode_ts.size());
                for (double t : ode_ts)
                    vals.push_back(want_tail ? bps::unconditional_tail_ode(P, t)
                                             : bps::unconditional_density_ode(P, t));
            }
            for (std::size_t j = 0; j < ode_idx.size(); ++j)
                rows[ode_idx[j]] = {vals[j], 1e-10 * (1.0 + std::abs(vals[j])),
                                    "ode"};
        }
    }

    ordered_json meta{{"command", cmd},
                      {"rho", o.rho},
                      {"n", json_n(n_opt)},
                      {"t", o.t},
                      {"method", o.method},
                      {"seed", o.seed},
                      {"reps", o.reps},
                      {"tol", o.tol},
                      {"format", o.format},
                      {"versions", versions_json()}};
    std::vector<std::string> header{"rho", "n", "t", "value", "method", "err_est"};
    std::vector<ordered_json> records;
    for (std::size_t i = 0; i < pts.size(); ++i)
        records.push_back(ordered_json{{"rho", o.rho},
                                       {"n", json_n(n_opt)},
                                       {"t", pts[i]},
                                       {"value", rows[i].v},
                                       {"method", rows[i].used},
                                       {"err_est", rows[i].err}});
    emit(meta, header, records, o.format, o.output);
    return 0;
}

int run_moments(const Opts& o) {
    bps::ModelParams P;
    P.rho = o.rho;
    P.tol = o.tol;
    P.validate();
    std::optional<int> n_opt = parse_n(o.n);
    std::string m = (o.method == "auto") ? "spectral" : o.method;
    if (m != "spectral" && m != "ode" && m != "simulate")
        throw bps::domain_error("moments: method must be spectral, ode, simulate, or auto");

    double mean = 0.0, second = 0.0;
    if (m == "simulate") {
        bps::SimConfig cfg;
        cfg.rho = o.rho;
        cfg.reps = o.reps;
        cfg.seed = o.seed;
        bps::SimOutcome out;
        if (n_opt) {
            cfg.n0 = *n_opt;
            out = bps::simulate_ps_conditional(cfg);
        } else {
            cfg.stationary = true;
            out = bps::simulate_ps_unconditional(cfg);
        }
        mean = out.mean;
        second = out.second_moment;
    } else if (n_opt) {
        mean = (m == "ode") ? bps::mean_sojourn_ode(P, *n_opt)
                            : bps::mean_sojourn_series(P, *n_opt);
        second = (m == "ode") ? bps::second_moment_ode(P, *n_opt)
                              : bps::second_moment_series(P, *n_opt);
    } else {
        // Stationary arrival: Poisson(rho) mixture over the initial occupancy,
        // truncated once the remaining weight cannot move the sums.
        double logw = -o.rho;  // log of Poisson(rho) pmf at k = 0
        for (int k = 0;; ++k) {
            if (k > 0) logw += std::log(o.rho) - std::log(static_cast<double>(k));
            double w = std::exp(logw);
            if (k > o.rho && w < 1e-16) break;
            if (k > 2000)
                throw bps::convergence_error("moments: mixture truncation stalled",
                                             mean, w);
            mean += w * ((m == "ode") ? bps::mean_sojourn_ode(P, k)
                                      : bps::mean_sojourn_series(P, k));
            second += w * ((m == "ode") ? bps::second_moment_ode(P, k)
                                        : bps::second_moment_series(P, k));
        }
    }

    ordered_json meta{{"command", "moments"}, {"rho", o.rho},
                      {"n", json_n(n_opt)},  {"method", o.method},
                      {"seed", o.seed},      {"reps", o.reps},
                      {"tol", o.tol},        {"format", o.format},
                      {"versions", versions_json()}};
    std::vector<ordered_json> records{ordered_json{
        {"n", json_n(n_opt)}, {"mean", mean}, {"second_moment", second}}};
    emit(meta, {"n", "mean", "second_moment"}, records, o.format, o.output);
    return 0;
}

int run_transform(const Opts& o) {
    bps::ModelParams P;
    P.rho = o.rho;
    P.tol = o.tol;
    P.validate();
    std::optional<int> n_opt = parse_n(o.n);
    if (!n_opt)
        throw bps::domain_error("transform: --n mix is not supported; pass an integer");
    if (o.method != "auto" && o.method != "spectral")
        throw bps::domain_error(
            "transform: method must be auto (contour quadrature) or spectral "
            "(pole sum)");
    std::vector<double> thetas = parse_grid(o.theta, "--theta");

    std::vector<ordered_json> records;
    for (double th : thetas) {
        double v = (o.method == "spectral")
                       ? bps::pole_sum_transform(P, th, *n_opt)
                       : bps::laplace_transform(P, th, *n_opt).value;
        records.push_back(ordered_json{{"theta", th}, {"value", v}});
    }
    ordered_json meta{{"command", "transform"}, {"rho", o.rho},
                      {"n", json_n(n_opt)},     {"theta", o.theta},
                      {"method", o.method},     {"tol", o.tol},
                      {"format", o.format},     {"versions", versions_json()}};
    emit(meta, {"theta", "value"}, records, o.format, o.output);
    return 0;
}

int run_asymptotic(const Opts& o) {
    bps::ModelParams P;
    P.rho = o.rho;
    P.tol = o.tol;
    P.validate();
    std::optional<int> n_opt = parse_n(o.n);
    std::vector<double> pts = parse_grid(o.t, "--t");

    std::vector<ordered_json> records;
    for (double t : pts) {
        std::string coords;
        bps::RegimeValue rv = route_asymptotic(P, n_opt, t, &coords);
        records.push_back(ordered_json{
            {"regime", rv.regime}, {"value", rv.value}, {"coords", coords}});
    }
    ordered_json meta{{"command", "asymptotic"}, {"rho", o.rho},
                      {"n", json_n(n_opt)},      {"t", o.t},
                      {"tol", o.tol},            {"format", o.format},
                      {"versions", versions_json()}};
    emit(meta, {"regime", "value", "coords"}, records, o.format, o.output);
    return 0;
}

int run_simulate(const Opts& o) {
    std::optional<int> n_opt = parse_n(o.n);
    std::vector<double> pts = parse_grid(o.t, "--t");

    bps::SimConfig cfg;
    cfg.rho = o.rho;
    cfg.reps = o.reps;
    cfg.seed = o.seed;
    cfg.t_points = pts;
    bps::SimOutcome out;
    if (o.discipline == "ros") {
        if (n_opt) cfg.condition_view = *n_opt;
        out = bps::simulate_ros(cfg);
    } else if (n_opt) {
        cfg.n0 = *n_opt;
        out = bps::simulate_ps_conditional(cfg);
    } else {
        cfg.stationary = true;
        out = bps::simulate_ps_unconditional(cfg);
    }

    ordered_json meta{{"command", "simulate"},
                      {"rho", o.rho},
                      {"n", json_n(n_opt)},
                      {"t", o.t},
                      {"discipline", o.discipline},
                      {"reps", o.reps},
                      {"seed", o.seed},
                      {"format", o.format},
                      {"versions", versions_json()}};
    std::vector<std::string> header{
        "t",    "tail_hat",      "half_width", "reps_used",
        "seed", "mean",          "second_moment", "mean_se",
        "second_moment_se", "zero_fraction", "truncated", "warmup_warning"};
    std::vector<ordered_json> records;
    for (std::size_t i = 0; i < pts.size(); ++i)
        records.push_back(ordered_json{{"t", out.t_points[i]},
                                       {"tail_hat", out.tail_hat[i]},
                                       {"half_width", out.half_width[i]},
                                       {"reps_used", out.reps_used},
                                       {"seed", out.seed},
                                       {"mean", out.mean},
                                       {"second_moment", out.second_moment},
                                       {"mean_se", out.mean_se},
                                       {"second_moment_se", out.second_moment_se},
                                       {"zero_fraction", out.zero_fraction},
                                       {"truncated", out.truncated},
                                       {"warmup_warning", out.warmup_warning}});
    emit(meta, header, records, o.format, o.output);
    return 0;
}

int run_validate(const Opts& o) {
    using namespace bps::acceptance;
    std::printf("validation suite, %s mode, seed %llu\n", o.quick ? "quick" : "full",
                static_cast<unsigned long long>(o.seed));
    bool all = true;
    for (const std::string& id : criterion_ids()) {
        CriterionResult r = run_criterion(id, o.quick, o.seed);
        std::printf("%s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str());
        for (const std::string& line : r.lines) std::printf("%s\n", line.c_str());
        all = all && r.pass;
    }
    std::printf("---- 10_determinism: rerun this command with the same --seed and "
                "compare bytes\n");
    std::printf("%s\n", all ? "RESULT: all criteria passed"
                            : "RESULT: some criteria failed");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{
        "Sojourn-time distribution of the processor-sharing queue in which an "
        "arrival finding n customers joins with probability 1/(n+1)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_method) {
        sub->add_option("--rho", o.rho, "arrival rate (service rate is 1)")
            ->capture_default_str();
        sub->add_option("--tol", o.tol, "relative accuracy target")
            ->capture_default_str();
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", o.output, "output file (default: stdout)");
        if (with_method)
            sub->add_option("--method", o.method, "evaluation method")
                ->check(CLI::IsMember(
                    {"auto", "spectral", "ode", "asymptotic", "simulate"}))
                ->capture_default_str();
    };

    CLI::App* density = app.add_subcommand(
        "density", "conditional or stationary-arrival sojourn density p_n(t)");
    add_common(density, true);
    density->add_option("--n", o.n, "customers seen on arrival, or 'mix'")
        ->capture_default_str();
    density->add_option("--t", o.t, "time point or START:STOP:COUNT grid")
        ->required();
    density->add_option("--seed", o.seed, "simulation seed")->capture_default_str();
    density->add_option("--reps", o.reps, "simulation replications")
        ->capture_default_str();

    CLI::App* tail = app.add_subcommand(
        "tail", "sojourn tail probability P[V_n > t] (or stationary mixture)");
    add_common(tail, true);
    tail->add_option("--n", o.n, "customers seen on arrival, or 'mix'")
        ->capture_default_str();
    tail->add_option("--t", o.t, "time point or START:STOP:COUNT grid")->required();
    tail->add_option("--seed", o.seed, "simulation seed")->capture_default_str();
    tail->add_option("--reps", o.reps, "simulation replications")
        ->capture_default_str();

    CLI::App* moments = app.add_subcommand(
        "moments", "conditional (or stationary-arrival) sojourn mean and second moment");
    add_common(moments, true);
    moments->add_option("--n", o.n, "customers seen on arrival, or 'mix'")
        ->capture_default_str();
    moments->add_option("--seed", o.seed, "simulation seed")->capture_default_str();
    moments->add_option("--reps", o.reps, "simulation replications")
        ->capture_default_str();

    CLI::App* transform = app.add_subcommand(
        "transform", "Laplace transform of the conditional density at real theta");
    add_common(transform, true);
    transform->add_option("--n", o.n, "customers seen on arrival (integer)")
        ->capture_default_str();
    transform->add_option("--theta", o.theta, "theta point or START:STOP:COUNT grid")
        ->required();

    CLI::App* asymptotic = app.add_subcommand(
        "asymptotic", "published asymptotic approximations with regime routing");
    add_common(asymptotic, false);
    asymptotic->add_option("--n", o.n, "customers seen on arrival, or 'mix'")
        ->capture_default_str();
    asymptotic->add_option("--t", o.t, "time point or START:STOP:COUNT grid")
        ->required();

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo tail/moment estimates (processor sharing or "
                    "random-order service)");
    add_common(simulate, false);
    simulate->add_option("--n", o.n,
                         "ps: initial others (or 'mix' for stationary); ros: "
                         "condition on view (or 'mix' for none)");
    simulate->add_option("--t", o.t, "tail evaluation points")->required();
    simulate->add_option("--discipline", o.discipline, "queueing discipline")
        ->check(CLI::IsMember({"ps", "ros"}))
        ->capture_default_str();
    simulate->add_option("--seed", o.seed, "simulation seed")->capture_default_str();
    simulate->add_option("--reps", o.reps, "replications")->capture_default_str();

    CLI::App* validate = app.add_subcommand(
        "validate", "run the numerical validation suite (exit 1 on any failure)");
    validate->add_flag("--quick", o.quick, "reduced grids and replication counts");
    validate->add_option("--seed", o.seed, "simulation seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed() && simulate->count("--n") == 0) o.n = "mix";
        if (density->parsed()) return run_point_command(false, o);
        if (tail->parsed()) return run_point_command(true, o);
        if (moments->parsed()) return run_moments(o);
        if (transform->parsed()) return run_transform(o);
        if (asymptotic->parsed()) return run_asymptotic(o);
        if (simulate->parsed()) return run_simulate(o);
        if (validate->parsed()) return run_validate(o);
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const bps::convergence_error& e) {
        std::fprintf(stderr, "numeric failure: %s (partial value %.17g, error %.3g)\n",
                     e.what(), e.partial_value, e.error_estimate);
        return 3;
    } catch (const bps::domain_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    }
}
