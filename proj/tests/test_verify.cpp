#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include "hypgrow/errors.hpp"
#include "hypgrow/verify.hpp"

using namespace hypgrow;

namespace {

const ClaimRecord& find(const SuiteReport& r, const std::string& id) {
    for (const ClaimRecord& c : r.claims)
        if (c.claim_id == id) return c;
    REQUIRE_MESSAGE(false, "missing claim ", id);
    static ClaimRecord dummy;
    return dummy;
}

}  // namespace

TEST_CASE("suite is deterministic and fully green apart from flags") {
    SuiteReport a = run_suite();
    SuiteReport b = run_suite();
    CHECK(a.claims.size() == 67);
    CHECK(a.passed() == 61);
    CHECK(a.failed() == 0);
    CHECK(a.flagged() == 6);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a).dump(2) == report_json(b).dump(2));

    // ids come out sorted
    for (std::size_t i = 1; i < a.claims.size(); ++i)
        CHECK(a.claims[i - 1].claim_id < a.claims[i].claim_id);
}

TEST_CASE("the flagged set is exactly the registered discrepancies") {
    SuiteReport r = run_suite();
    std::set<std::string> flagged;
    for (const ClaimRecord& c : r.claims)
        if (c.status == "flagged") flagged.insert(c.claim_id);
    const std::set<std::string> want = {
        "cor:any-direction/derivative-alpha",
        "exa:comb/estimate2",
        "exa:polynomial/g-printed",
        "thm:cassinian/derivative",
        "thm:seittenranta/lower-printed",
        "thm:tau-distance/lower-in-g2",
    };
    CHECK(flagged == want);
    for (const ClaimRecord& c : r.claims)
        if (c.status == "flagged") {
            CHECK(!c.note.empty());
            CHECK(c.provenance == "stated");
        }
}

TEST_CASE("flagged measurements carry the independently computed values") {
    SuiteReport r = run_suite();
    CHECK(find(r, "thm:cassinian/derivative").observed ==
          doctest::Approx(0.25).epsilon(1e-3));
    CHECK(find(r, "cor:any-direction/derivative-alpha").observed ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-3));
    const double vtau = find(r, "thm:tau-distance/lower-in-g2").observed;
    CHECK(vtau > 0.05);
    CHECK(vtau < 0.2);
    CHECK(find(r, "exa:polynomial/g-printed").observed ==
          doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(find(r, "thm:seittenranta/lower-printed").observed ==
          doctest::Approx(std::log(2.0)).epsilon(1e-6));
    CHECK(find(r, "exa:comb/estimate2").expected ==
          doctest::Approx(std::sqrt(65.0) / 128.0).epsilon(1e-12));
}

TEST_CASE("anchor values inside the suite") {
    SuiteReport r = run_suite({"thm:f-for-alpha/sharp-upper", "exa:rho-in-B"});
    CHECK(find(r, "thm:f-for-alpha/sharp-upper").observed ==
          doctest::Approx(std::log(3.0)).epsilon(1e-6));
    CHECK(find(r, "exa:rho-in-B/derivative").observed ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(find(r, "exa:rho-in-B/derivative").status == "pass");
}

TEST_CASE("selection filters by id prefix") {
    CHECK(run_suite({"thm:cassinian"}).claims.size() == 3);
    CHECK(run_suite({"exa:comb"}).claims.size() == 5);
    CHECK(run_suite({"thm:seittenranta/lower"}).claims.size() == 2);
    CHECK(run_suite({"none:such"}).claims.empty());
    SuiteReport two = run_suite({"prop:", "rem:"});
    CHECK(two.claims.size() == 4);
    for (const ClaimRecord& c : two.claims)
        CHECK((c.claim_id.rfind("prop:", 0) == 0 ||
               c.claim_id.rfind("rem:", 0) == 0));
}

TEST_CASE("tolerance scale loosens checks but never unflags") {
    SuiteReport r = run_suite({"thm:"}, 1e6);
    CHECK(r.tol_scale == 1e6);
    CHECK(r.failed() == 0);
    int flagged = 0;
    for (const ClaimRecord& c : r.claims)
        if (c.status == "flagged") ++flagged;
    CHECK(flagged == 3);  // cassinian, seittenranta, tau stay flagged

    CHECK_THROWS_AS(run_suite({}, 0.0), PreconditionError);
    CHECK_THROWS_AS(run_suite({}, -1.0), PreconditionError);
}

TEST_CASE("comb extrema check enumerates every level") {
    auto recs = comb_extrema_check(5);
    REQUIRE(recs.size() == 18);
    for (int l = 0; l <= 5; ++l) {
        const std::string s = "-l" + std::to_string(l);
        CHECK(recs[3 * l + 0].claim_id == "exa:comb/foot" + s);
        CHECK(recs[3 * l + 1].claim_id == "exa:comb/estimate2" + s);
        CHECK(recs[3 * l + 2].claim_id == "exa:comb/strict" + s);
        CHECK(recs[3 * l + 0].status == "pass");
        CHECK(recs[3 * l + 1].status == (l <= 2 ? "pass" : "fail"));
        CHECK(recs[3 * l + 2].status == "pass");
    }
    CHECK(recs[0].expected == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(recs[1].expected ==
          doctest::Approx(std::sqrt(65.0) / 16.0).epsilon(1e-15));
    CHECK(!recs[10].note.empty());  // estimate2-l3 explains the failure

    CHECK(comb_extrema_check(0).size() == 3);
    CHECK_THROWS_AS(comb_extrema_check(19), PreconditionError);
    CHECK_THROWS_AS(comb_extrema_check(-1), PreconditionError);
}

TEST_CASE("ray profile of the corner example follows the two branches") {
    auto recs = example31_check();
    REQUIRE(recs.size() == 3);
    for (const ClaimRecord& c : recs) CHECK(c.status == "pass");
    CHECK(recs[0].claim_id == "exa:simple-domain/piecewise");
    CHECK(recs[0].observed <= 1e-9);
    CHECK(recs[1].expected ==
          doctest::Approx((std::sqrt(5.0) - 2.0) / std::sqrt(5.0))
              .epsilon(1e-15));
}

TEST_CASE("json report shape") {
    SuiteReport r = run_suite({"lem:"});
    Json j = report_json(r);
    CHECK(j["suite"] == "growth-claims");
    CHECK(j["tol_scale"] == 1.0);
    CHECK(j["counts"]["fail"] == 0);
    CHECK(j["claims"].size() == r.claims.size());
    for (const auto& c : j["claims"]) {
        CHECK(c.contains("claim_id"));
        CHECK(c.contains("status"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("observed"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("provenance"));
        CHECK(!c.contains("runtime_ms"));
    }
}

TEST_CASE("text report shape") {
    SuiteReport r = run_suite();
    const std::string t = report_text(r);
    CHECK(t.find("61 pass, 0 fail, 6 flagged") != std::string::npos);
    CHECK(t.find("thm:seittenranta/lower-printed") != std::string::npos);
    CHECK(t.find("status") != std::string::npos);
}
