#pragma once

#include <cstdint>
#include <string>

namespace dumont {

// Defaults shared by the CLI and the verification suites. Enumeration
// bounds are sized so the whole acceptance run stays at desk scale.
struct RunConfig {
    int sn_max = 10;        // symmetric-group enumeration bound (11 behind a flag)
    int bn_max = 7;         // signed permutations
    int matching_max = 8;   // perfect matchings of [2n]
    int triangle_nmax = 12;
    int egf_order = 12;
    int samples = 8;
    double tol = 1e-8;
    int rk_steps = 512;
    std::uint64_t seed = 42;
    double case_timeout_seconds = 300.0;
    std::string format = "pretty";  // json | csv | pretty

    void validate() const;
};

// key=value lines; '#' starts a comment. Unknown keys are an error.
RunConfig load_config_file(const std::string& path, RunConfig base);
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace dumont
