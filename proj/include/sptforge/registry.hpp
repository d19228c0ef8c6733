#pragma once

#include <sptforge/report.hpp>
#include <sptforge/sptcrank.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sptforge {

enum class CaseRing { integer, cyclotomic, two_variable };

// One side-by-side comparison inside a case.
struct Comparison {
    std::string label;
    AnySeries lhs;
    AnySeries rhs;
};

struct IdentityCase {
    std::string id;
    CaseRing ring = CaseRing::integer;
    int t = 0;
    int default_order = 0;
    // Order used by --paper-bounds runs; 0 means the default order.
    int reference_order = 0;
    std::string citation;
    std::function<std::vector<Comparison>(int order)> build;

    std::string ring_name() const;
};

// Sorted by id.
const std::vector<IdentityCase> &catalog();
// nullptr when the id is unknown.
const IdentityCase *lookup(const std::string &id);

struct VerifyOptions {
    std::optional<int> order;
    bool reference_bounds = false;
};

// Runs c at max(default order, override), or at its reference order with
// reference_bounds. Builder failures are rethrown with the case id.
VerificationReport run_case(const IdentityCase &c, const VerifyOptions &opts = {});
// Throws std::out_of_range for unknown ids.
VerificationReport verify_case(const std::string &id, const VerifyOptions &opts = {});
// Cases whose id matches the glob, ordered by id.
std::vector<VerificationReport> verify_all(const std::string &filter = "*", int parallelism = 1,
                                           const VerifyOptions &opts = {});
bool all_verified(const std::vector<VerificationReport> &reports);
bool glob_match(const std::string &pattern, const std::string &id);

// dissect_F3_3 with the sign of one right-hand term flipped.
IdentityCase negative_control();

// Both sides of the single-series theorem for J1, J2, J3, F3, G4, AG4.
LaurentSeries single_series_lhs(Family family, int order);
LaurentSeries single_series_rhs(Family family, int order);

} // namespace sptforge
