// Standalone acceptance runner: executes one named validation criterion at
// full scale and exits 0/1.  Criterion "10_determinism" shells out to the CLI
// (path in $BALKING_PS_CLI) and byte-compares two seeded `validate --quick`
// runs; everything else goes through the shared validation suite.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "balking_ps/acceptance.hpp"

namespace {

std::string run_capture(const std::string& cmd, int* exit_code) {
    std::string out;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) {
        *exit_code = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    *exit_code = ::pclose(p);
    return out;
}

int run_determinism() {
    const char* cli = std::getenv("BALKING_PS_CLI");
    if (!cli || !*cli) {
        std::fprintf(stderr, "10_determinism: BALKING_PS_CLI is not set\n");
        return 1;
    }
    std::string cmd = std::string("\"") + cli + "\" validate --quick --seed 7 2>&1";
    int rc1 = 0, rc2 = 0;
    std::string a = run_capture(cmd, &rc1);
    std::string b = run_capture(cmd, &rc2);
    bool same = (a == b) && (rc1 == rc2) && !a.empty();
    std::printf("  %s two seeded quick-validate runs byte-identical (%zu bytes each)\n",
                same ? "[ok]" : "[!!]", a.size());
    std::printf("%s 10_determinism\n", same ? "PASS" : "FAIL");
    return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr,
                     "usage: acceptance <criterion-id> [--quick] [--seed N]\n");
        return 2;
    }
    std::string id = argv[1];
    bool quick = false;
    std::uint64_t seed = 1;
    for (int i = 2; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", argv[i]);
            return 2;
        }
    }

    if (id == "10_determinism") return run_determinism();

    try {
        auto res = balking_ps::acceptance::run_criterion(id, quick, seed);
        for (const auto& line : res.lines) std::printf("%s\n", line.c_str());
        std::printf("%s %s\n", res.pass ? "PASS" : "FAIL", res.id.c_str());
        return res.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error running %s: %s\n", id.c_str(), e.what());
        return 1;
    }
}
