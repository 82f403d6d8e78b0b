#pragma once

#include <string>
#include <vector>

#include "hypgrow/profile.hpp"

namespace hypgrow {

// One checked claim. For equality claims `expected` is the target value and
// `observed` the measured one. For containment and interval claims `expected`
// is 0 and `observed` is the distance from the allowed set, so a holding
// claim reads observed == expected. `status` is "pass", "fail" or "flagged";
// flagged marks a registered discrepancy whose note records both readings.
// It never turns into a pass, whatever the tolerance scale.
struct ClaimRecord {
    std::string claim_id;
    std::string domain;   // short domain tag, "-" when the claim spans several
    std::string inputs;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    std::string provenance;  // closed_form | stated | derived | construction
    std::string status;
    std::string note;
};

struct SuiteReport {
    double tol_scale = 1.0;
    std::vector<ClaimRecord> claims;

    int passed() const;
    int failed() const;
    int flagged() const;
};

// Runs the claim registry. `selection` keeps the claims whose id starts with
// any given prefix (empty runs everything). Claims are evaluated and reported
// in claim id order and the whole run is deterministic: two runs with the
// same arguments produce byte-identical reports. `tol_scale` multiplies every
// tolerance; registered discrepancies stay flagged regardless.
SuiteReport run_suite(const std::vector<std::string>& selection = {},
                      double tol_scale = 1.0);

// Raw per-tooth records behind the comb growth claims, on a 20-tooth comb:
// for each l = 0..max_l the boundary distance at the tooth foot 1 - 2^-l,
// the stated sqrt(65) midpoint value, and the strict growth between them.
// Individual failures come back as data. max_l must lie in [0, 18].
std::vector<ClaimRecord> comb_extrema_check(int max_l);

// The worked two-branch distance formula along the ray through (1,2) in the
// quadrant complement at (1,1): grid agreement with the measured distance,
// the far branch sample at t = 2, and continuity at the branch point.
std::vector<ClaimRecord> example31_check();

Json report_json(const SuiteReport& r);
std::string report_text(const SuiteReport& r);

}  // namespace hypgrow
