#include "doctest.h"

#include "dumont/identities.hpp"

using namespace dumont;

namespace {

IdentityContext& ctx() {
    static IdentityContext c{RunConfig{}};
    return c;
}

VerificationReport run1(const std::string& id, int nmax) {
    auto reports = run_identity(id, ctx(), nmax);
    REQUIRE(reports.size() == 1);
    return reports.front();
}

}  // namespace

TEST_CASE("row, column and slice identities at reduced range") {
    for (const char* id : {"mainthm01.i", "mainthm01.ii", "mainthm01.iii", "mainthm01.iv",
                           "mainthm01.vi", "mainthm01.vii", "mainthm01.viii", "mainthm01.ix",
                           "concl01.i", "concl01.ii", "concl01.iii", "mainthm02.i",
                           "mainthm02.ii", "mainthm02.iii", "mainthm02.iv", "mainthm02.v"}) {
        auto r = run1(id, 7);
        INFO(id << ": " << r.counterexample);
        CHECK(r.pass);
    }
}

TEST_CASE("signed-permutation item respects its enumeration bound") {
    auto r = run1("mainthm01.v", 9);
    CHECK(r.pass);
    CHECK(r.range.find("7") != std::string::npos);
}

TEST_CASE("polynomial identities at reduced range") {
    for (const char* id : {"stembridge", "petersen", "runs-peaks", "recurrences.P",
                           "recurrences.Ptilde", "recurrences.N"}) {
        auto r = run1(id, 7);
        INFO(id << ": " << r.counterexample);
        CHECK(r.pass);
    }
    auto tb = run1("typeB", 6);
    CHECK(tb.pass);
    auto ema = run1("eulerian-matching-convolution", 6);
    CHECK(ema.pass);
    CHECK(ema.note.find("shifted Eulerian convention") != std::string::npos);
}

TEST_CASE("series-driven identities") {
    CHECK(run1("jacobi-tnij", 10).pass);
    CHECK(run1("j-convolution", 3).pass);
    CHECK(run1("dumont-gf", 6).pass);
}

TEST_CASE("the closing conjecture checker reports honestly") {
    auto r = run1("conjecture", 7);
    CHECK(r.pass);
    CHECK(r.range == "n <= 7");
}

TEST_CASE("cross-method agreement over all seven arrays") {
    auto r = check_cross_method(ctx(), 8);
    INFO(r.counterexample);
    CHECK(r.pass);
}

TEST_CASE("id registry") {
    auto ids = identity_ids();
    CHECK(ids.size() == 29 + 17);
    CHECK_THROWS_AS(run_identity("no-such-id", ctx()), std::invalid_argument);
}

TEST_CASE("reports serialize to json") {
    auto r = run1("mainthm02.i", 5);
    auto j = r.to_json();
    CHECK(j["id"] == "mainthm02.i");
    CHECK(j["status"] == "pass");
}
