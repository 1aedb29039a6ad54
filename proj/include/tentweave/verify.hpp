#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tentweave {

struct VerifyConfig {
    std::size_t depth = 12;         // tails, order coherence
    std::size_t extrema_len = 8;    // |B| bound for closed-form extrema
    std::size_t planarity_trials = 1000;
    std::size_t planarity_depth = 10;
    std::size_t samples = 200;      // random draws per property
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
    bool corrupt_extrema = false;   // fault injection for the extrema table
    std::vector<std::string> only;  // run only these checks when nonempty
};

// key=value lines, '#' comments. Keys are the field names above; `only` is a
// comma separated list.
VerifyConfig parse_config(const std::string& text, VerifyConfig base = {});
VerifyConfig load_config(const std::string& path, VerifyConfig base = {});
// TENTWEAVE_DEPTH overrides depth.
void apply_env(VerifyConfig& cfg);

struct CheckResult {
    std::string name;
    int criterion = 0;  // acceptance criterion number, 0 for property suites
    bool pass = false;
    std::string detail;
    std::vector<std::string> counterexamples;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool pass() const;
};

struct CheckInfo {
    std::string name;
    int criterion;
};
const std::vector<CheckInfo>& check_catalog();

CheckResult run_check(const std::string& name, const VerifyConfig& cfg);
VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace tentweave
