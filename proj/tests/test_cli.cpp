#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("BALKING_PS_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string("\"") + cli + "\" " + args + " 2>&1";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = ::pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("density at time zero through the ODE path returns the initial value") {
    RunResult r = run_cli("density --rho 1 --n 0 --t 0 --method ode");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0] == std::vector<std::string>{"rho", "n", "t", "value", "method",
                                                "err_est"});
    REQUIRE_THAT(std::stod(rows[1][3]), WithinAbs(1.0, 1e-9));
    REQUIRE(rows[1][4] == "ode");
}

TEST_CASE("moments match the closed forms through the CLI") {
    RunResult r = run_cli("moments --rho 1 --n 4");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0] == std::vector<std::string>{"n", "mean", "second_moment"});
    REQUIRE_THAT(std::stod(rows[1][1]), WithinRel(3.5, 1e-9));
    REQUIRE_THAT(std::stod(rows[1][2]), WithinRel(127.0 / 6.0, 1e-8));
}

TEST_CASE("time grids are inclusive and strictly increasing") {
    RunResult r = run_cli("tail --rho 1 --n 0 --t 1:2:3");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    REQUIRE(std::stod(rows[1][2]) == 1.0);
    REQUIRE(std::stod(rows[2][2]) == 1.5);
    REQUIRE(std::stod(rows[3][2]) == 2.0);
    double prev = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double v = std::stod(rows[i][3]);
        REQUIRE(v < prev);
        prev = v;
    }
}

TEST_CASE("JSON output carries meta and records") {
    RunResult r = run_cli("density --rho 1 --n 2 --t 0.5:2.5:3 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_object());
    REQUIRE(doc.contains("meta"));
    REQUIRE(doc.contains("records"));
    REQUIRE(doc["meta"]["command"] == "density");
    REQUIRE(doc["meta"]["rho"] == 1.0);
    REQUIRE(doc["meta"]["n"] == 2);
    REQUIRE(doc["meta"].contains("versions"));
    REQUIRE(doc["meta"].contains("seed"));
    REQUIRE(doc["records"].size() == 3);
    for (const auto& rec : doc["records"]) {
        REQUIRE(rec["n"] == 2);
        REQUIRE(rec["value"].is_number());
    }
}

TEST_CASE("automatic method selection matches the forced methods") {
    // Above the crossover the automatic route must reproduce the series bytes.
    RunResult au = run_cli("density --rho 1 --n 1 --t 2");
    RunResult sp = run_cli("density --rho 1 --n 1 --t 2 --method spectral");
    REQUIRE(au.exit_code == 0);
    REQUIRE(au.out == sp.out);
    auto rows = parse_csv(au.out);
    REQUIRE(rows[1][4] == "spectral");

    // Below it the automatic route must reproduce the initial-value solver.
    RunResult au2 = run_cli("density --rho 1 --n 1 --t 0.05");
    RunResult od = run_cli("density --rho 1 --n 1 --t 0.05 --method ode");
    REQUIRE(au2.exit_code == 0);
    REQUIRE(au2.out == od.out);
    auto rows2 = parse_csv(au2.out);
    REQUIRE(rows2[1][4] == "ode");

    // And the two methods agree numerically across the switch.
    RunResult a = run_cli("density --rho 1 --n 1 --t 0.3 --method spectral");
    RunResult b = run_cli("density --rho 1 --n 1 --t 0.3 --method ode");
    double va = std::stod(parse_csv(a.out)[1][3]);
    double vb = std::stod(parse_csv(b.out)[1][3]);
    REQUIRE_THAT(va, WithinAbs(vb, 1e-6));
}

TEST_CASE("stationary-arrival records use the mix marker") {
    RunResult r = run_cli("tail --rho 1 --n mix --t 1");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows[1][1] == "mix");

    RunResult m = run_cli("moments --rho 1 --n mix");
    REQUIRE(m.exit_code == 0);
    auto mrows = parse_csv(m.out);
    REQUIRE_THAT(std::stod(mrows[1][1]), WithinRel(2.0, 1e-9));
}

TEST_CASE("transform subcommand emits theta-value pairs from both evaluators") {
    RunResult q = run_cli("transform --rho 1 --n 0 --theta 1");
    RunResult s = run_cli("transform --rho 1 --n 0 --theta 1 --method spectral");
    REQUIRE(q.exit_code == 0);
    REQUIRE(s.exit_code == 0);
    auto qr = parse_csv(q.out);
    auto sr = parse_csv(s.out);
    REQUIRE(qr[0] == std::vector<std::string>{"theta", "value"});
    REQUIRE_THAT(std::stod(qr[1][1]), WithinRel(0.4480743271063752, 1e-9));
    REQUIRE_THAT(std::stod(sr[1][1]), WithinRel(std::stod(qr[1][1]), 1e-7));
}

TEST_CASE("asymptotic subcommand reports regimes with scaled coordinates") {
    RunResult r = run_cli("asymptotic --rho 100 --n 100 --t 100");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows[0] == std::vector<std::string>{"regime", "value", "coords"});
    REQUIRE(rows[1][0] == "heavy");
    REQUIRE(rows[1][2].find("N=1") != std::string::npos);

    RunResult l = run_cli("asymptotic --rho 0.01 --n 0 --t 1");
    REQUIRE(l.exit_code == 0);
    REQUIRE(parse_csv(l.out)[1][0].rfind("light-", 0) == 0);

    RunResult f = run_cli("asymptotic --rho 1 --n 0 --t 30");
    REQUIRE(f.exit_code == 0);
    REQUIRE(parse_csv(f.out)[1][0].rfind("fixed-rho-", 0) == 0);
}

TEST_CASE("simulation runs are deterministic for a fixed seed") {
    std::string args = "simulate --rho 1 --n 0 --t 0.5:2:4 --reps 20000 --seed 5";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    auto rows = parse_csv(a.out);
    REQUIRE(rows.size() == 5);
    REQUIRE(rows[0][0] == "t");
    REQUIRE(rows[0][1] == "tail_hat");

    RunResult c = run_cli(args + "1");  // seed 51
    REQUIRE(c.out != a.out);
}

TEST_CASE("random-order simulation exposes the zero-wait atom") {
    RunResult r = run_cli(
        "simulate --rho 1 --discipline ros --t 1 --reps 20000 --seed 9");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.out);
    std::size_t zcol = 0;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        if (rows[0][i] == "zero_fraction") zcol = i;
    REQUIRE(zcol > 0);
    double atom = std::stod(rows[1][zcol]);
    REQUIRE_THAT(atom, WithinAbs(std::exp(-1.0), 0.02));
}

TEST_CASE("CSV output uses LF endings and trailing newline") {
    RunResult r = run_cli("density --rho 1 --n 0 --t 1");
    REQUIRE(r.out.find('\r') == std::string::npos);
    REQUIRE(!r.out.empty());
    REQUIRE(r.out.back() == '\n');
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run_cli("density --rho 1 --n 0").exit_code == 2);           // no --t
    REQUIRE(run_cli("density --rho 1 --n 0 --t 1 --bogus").exit_code == 2);
    REQUIRE(run_cli("density --rho -1 --n 0 --t 1").exit_code == 2);
    REQUIRE(run_cli("density --rho 1 --n -3 --t 1").exit_code == 2);
    REQUIRE(run_cli("density --rho 1 --n 0 --t 2:1:5").exit_code == 2); // stop < start
    REQUIRE(run_cli("density --rho 1 --n 0 --t 1 --method simulate").exit_code == 2);
    REQUIRE(run_cli("tail --rho 1 --n 0 --t 1 --method asymptotic").exit_code == 2);
    REQUIRE(run_cli("transform --rho 1 --n mix --theta 1").exit_code == 2);
    REQUIRE(run_cli("transform --rho 1 --n 0 --theta -10").exit_code == 2);
    REQUIRE(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("output lands in a file when requested") {
    std::string path = "cli_test_out.csv";
    std::remove(path.c_str());
    RunResult r = run_cli("density --rho 1 --n 0 --t 1 --output " + path);
    REQUIRE(r.exit_code == 0);
    FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char buf[512];
    std::size_t got = std::fread(buf, 1, sizeof buf, f);
    std::fclose(f);
    std::remove(path.c_str());
    std::string content(buf, got);
    REQUIRE(content.rfind("rho,n,t,value,method,err_est\n", 0) == 0);
}
