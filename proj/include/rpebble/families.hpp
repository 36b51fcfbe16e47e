#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpebble/graph.hpp"
#include "rpebble/optimal.hpp"

namespace rpebble {

/// One tree of the radius-<=2, D=2 family with its computed invariants.
struct FamilyRecord {
    Graph tree;
    std::string canonical_code;
    int n = 0;
    int leaf_count = 0;
    int radius = 0;
    int d = 0;
    int pi2 = 0;             // pi*_2
    std::uint64_t p2 = 0;    // number of optimal 2-restricted configurations
    int pi_star = 0;         // pi*
    BoundsReport bounds;
};

/// All pairwise non-isomorphic trees with n >= 2, radius <= 2 and D = 2.
/// Spider signatures over the window root_leaves <= 4, child leaf counts
/// <= 3, multiplicities <= 5 are generated, deduplicated by canonical code
/// and filtered by D = 2; the window strictly contains the family since any
/// signature beyond it has a class that already forces D >= 3.
std::vector<FamilyRecord> enumerate_family(const SearchOptions& opts = {});

/// The P_2* multiset published for the 40-tree family, sorted ascending.
const std::vector<int>& published_family_p2_multiset();

struct FamilyCheck {
    bool all_bounds_hold = false;        // 2 <= pi2 <= 6, d <= pi2, 1 <= p2 <= 87
    std::vector<std::string> violations;
    std::vector<int> computed_multiset;  // sorted p2 values
    std::vector<int> missing;            // published entries not matched by computed
    std::vector<int> extra;              // computed entries not matched by published
    std::vector<bool> record_matched;    // per record, aligned with the input order
    bool multiset_match = false;
};

FamilyCheck family_multiset_check(const std::vector<FamilyRecord>& records);

struct ReportRow {
    std::string name;
    std::optional<int> expected_value;
    std::optional<std::int64_t> expected_count;
    std::optional<std::int64_t> expected_count_alt;  // conflicting second claim, if any
    int computed_value = 0;
    std::uint64_t computed_count = 0;
    std::string status;  // match | mismatch | unstated
    std::string note;
    bool recount_verified = false;  // independent ascending-order second pass agreed
};

/// Computed (pi*_2, P_2*) for the eight catalog alkanes against the
/// published table. Disagreements become report content, not errors; the
/// count of every row is re-verified by a second enumeration pass with the
/// opposite configuration ordering.
std::vector<ReportRow> alkane_report(const SearchOptions& opts = {});

/// Expected alkane table rows (name, pi2, p2, optional conflicting p2).
struct ExpectedAlkane {
    std::string name;
    int pi2;
    std::int64_t p2;
    std::optional<std::int64_t> p2_alt;
    std::string note;
};
const std::vector<ExpectedAlkane>& expected_alkane_table();

}  // namespace rpebble
