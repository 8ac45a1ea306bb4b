#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dumont/config.hpp"
#include "dumont/permstats.hpp"
#include "dumont/report.hpp"
#include "dumont/series.hpp"
#include "dumont/triangle.hpp"

namespace dumont {

// Shared lazily-built resources for the verification suite: triangles by
// provenance and the brute-force distribution tables, each cached at the
// deepest level requested so far.
class IdentityContext {
public:
    explicit IdentityContext(RunConfig cfg) : cfg_(std::move(cfg)) {}

    const RunConfig& config() const { return cfg_; }

    const Triangle& triangle(ArrayName name, int nmax);        // grammar extraction
    const Triangle& triangle_recur(ArrayName name, int nmax);  // recurrence build

    const DistributionTable& stat(const std::string& key, int n);
    const BivariateTable& cycle_peaks(int n);

private:
    RunConfig cfg_;
    std::map<std::string, Triangle> grammar_, recur_;
    std::map<std::pair<std::string, int>, DistributionTable> stats_;
    std::map<int, BivariateTable> cycle_;
};

// Canonical case ids: the theorem items, the polynomial identities, the
// series checks and the numeric closed-form comparisons.
std::vector<std::string> identity_ids();

// Runs one case. `nmax` overrides the default range and is capped by each
// case's enumeration limits; the effective range lands in report.range.
std::vector<VerificationReport> run_identity(const std::string& id, IdentityContext& ctx,
                                             std::optional<int> nmax = std::nullopt);

std::vector<VerificationReport> run_all_identities(IdentityContext& ctx,
                                                   std::optional<int> nmax = std::nullopt);

// Entrywise comparison of the two triangle construction paths.
VerificationReport check_cross_method(IdentityContext& ctx, int nmax);

// Grouped runners covering the theorem items one by one.
std::vector<VerificationReport> check_mainthm01(IdentityContext& ctx, int nmax);
std::vector<VerificationReport> check_concluding01(IdentityContext& ctx, int nmax);
std::vector<VerificationReport> check_mainthm02(IdentityContext& ctx, int nmax);
std::vector<VerificationReport> check_polynomial_identities(IdentityContext& ctx, int nmax);
VerificationReport check_conjecture(IdentityContext& ctx, int nmax);

}  // namespace dumont
