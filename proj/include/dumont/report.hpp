#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dumont {

// Outcome of one verification case. `counterexample` is filled exactly when
// the check fails; `note` records resolved readings (e.g. which printed form
// of a closed formula validated) so nothing is corrected silently.
struct VerificationReport {
    std::string id;
    std::string range;
    bool pass = false;
    std::string counterexample;
    std::string note;
    double elapsed_seconds = 0.0;
    int samples = -1;          // numeric comparisons only
    double worst_rel_err = -1; // numeric comparisons only

    nlohmann::json to_json() const {
        nlohmann::json j{{"id", id}, {"range", range}, {"status", pass ? "pass" : "fail"}};
        if (!counterexample.empty()) j["counterexample"] = counterexample;
        if (!note.empty()) j["note"] = note;
        j["elapsed_seconds"] = elapsed_seconds;
        if (samples >= 0) j["samples"] = samples;
        if (worst_rel_err >= 0) j["worst_rel_err"] = worst_rel_err;
        return j;
    }
};

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace dumont
