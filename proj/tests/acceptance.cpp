#include <cstdio>

#include "tentweave/verify.hpp"

using namespace tentweave;

int main(int argc, char** argv) {
    VerifyConfig cfg;
    if (argc > 1) cfg = load_config(argv[1]);
    apply_env(cfg);
    int failed = 0;
    for (const CheckInfo& info : check_catalog()) {
        if (info.criterion == 0) continue;
        CheckResult r = run_check(info.name, cfg);
        std::printf("[%s] %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str());
        std::printf("    %s (%.2fs)\n", r.detail.c_str(), r.seconds);
        for (const std::string& c : r.counterexamples) std::printf("    counterexample: %s\n", c.c_str());
        failed += !r.pass;
    }
    return failed == 0 ? 0 : 1;
}
