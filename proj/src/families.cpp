#include "rpebble/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rpebble/canonical.hpp"
#include "rpebble/distinguishing.hpp"
#include "rpebble/error.hpp"
#include "rpebble/generators.hpp"

namespace rpebble {

namespace {

// generation window: root leaves, then multiplicities of 1-, 2- and 3-leaf
// internal children; deliberately wider than D = 2 permits
constexpr int kMaxRootLeaves = 4;
constexpr int kMaxChildLeaves = 3;
constexpr int kMaxMultiplicity = 5;

std::vector<Graph> family_candidates() {
    std::vector<Graph> candidates;
    for (int root_leaves = 0; root_leaves <= kMaxRootLeaves; ++root_leaves) {
        std::vector<int> mult(kMaxChildLeaves + 1, 0);
        // odometer over multiplicities of child leaf counts 1..kMaxChildLeaves
        while (true) {
            std::vector<int> children;
            for (int c = 1; c <= kMaxChildLeaves; ++c)
                children.insert(children.end(), mult[c], c);
            if (root_leaves + children.size() > 0)
                candidates.push_back(spider(root_leaves, children));
            int c = 1;
            while (c <= kMaxChildLeaves && mult[c] == kMaxMultiplicity) mult[c++] = 0;
            if (c > kMaxChildLeaves) break;
            ++mult[c];
        }
    }
    return candidates;
}

}  // namespace

std::vector<FamilyRecord> enumerate_family(const SearchOptions& opts) {
    std::map<std::string, Graph> by_code;
    for (auto& g : family_candidates()) {
        if (g.order() < 2) continue;
        auto meta = tree_meta(g);
        if (!meta.is_tree || !meta.radius || *meta.radius > 2) continue;
        if (count_distinguishing_colorings(g, 2) == 0) continue;   // D >= 3
        if (count_distinguishing_colorings(g, 1) > 0) continue;    // D = 1 (rigid)
        by_code.emplace(canonical_code(g), std::move(g));
    }

    std::vector<FamilyRecord> records;
    for (auto& [code, tree] : by_code) {
        FamilyRecord rec;
        rec.canonical_code = code;
        rec.n = tree.order();
        auto meta = tree_meta(tree);
        rec.leaf_count = meta.leaf_count;
        rec.radius = *meta.radius;
        rec.d = distinguishing_number(tree).d;
        auto opt2 = restricted_optimal_number(tree, 2, opts);
        rec.pi2 = opt2.value;
        rec.p2 = opt2.count;
        rec.pi_star = optimal_number(tree, opts).value;
        rec.bounds = upper_bound_report(tree);
        rec.tree = std::move(tree);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.canonical_code < b.canonical_code;
    });
    return records;
}

const std::vector<int>& published_family_p2_multiset() {
    // 40 entries read off the published per-tree counts
    static const std::vector<int> multiset = {
        1,  3,  3,  4,  4,  4,  4,  6,  6,  8,  9,  9,  10, 10, 11, 11, 11, 13, 15, 15,
        15, 17, 17, 17, 21, 21, 21, 26, 26, 26, 28, 35, 39, 44, 52, 56, 61, 78, 82, 87};
    return multiset;
}

FamilyCheck family_multiset_check(const std::vector<FamilyRecord>& records) {
    FamilyCheck check;
    check.all_bounds_hold = true;
    for (const auto& rec : records) {
        auto blame = [&](const std::string& what) {
            check.all_bounds_hold = false;
            check.violations.push_back(rec.canonical_code + ": " + what);
        };
        if (rec.pi2 < 2 || rec.pi2 > 6) blame("pi2 outside [2,6]");
        if (rec.d > rec.pi2) blame("D exceeds pi2");
        if (rec.p2 < 1 || rec.p2 > 87) blame("P2* outside [1,87]");
    }

    for (const auto& rec : records) check.computed_multiset.push_back(static_cast<int>(rec.p2));
    std::sort(check.computed_multiset.begin(), check.computed_multiset.end());

    std::multiset<int> published(published_family_p2_multiset().begin(),
                                 published_family_p2_multiset().end());
    check.record_matched.assign(records.size(), false);
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto it = published.find(static_cast<int>(records[i].p2));
        if (it != published.end()) {
            published.erase(it);
            check.record_matched[i] = true;
        } else {
            check.extra.push_back(static_cast<int>(records[i].p2));
        }
    }
    check.missing.assign(published.begin(), published.end());
    std::sort(check.extra.begin(), check.extra.end());
    check.multiset_match = check.missing.empty() && check.extra.empty();
    return check;
}

const std::vector<ExpectedAlkane>& expected_alkane_table() {
    static const std::vector<ExpectedAlkane> table = {
        {"methane", 2, 1, std::nullopt, ""},
        {"ethane", 3, 2, std::nullopt, ""},
        {"propane", 4, 4, std::nullopt, ""},
        {"butane", 5, 8, std::nullopt, ""},
        {"pentane", 6, 16, std::nullopt, ""},
        {"isobutane", 5, 7, std::nullopt, ""},
        {"isopentane", 6, 13, std::nullopt, ""},
        // the source states 11 in the theorem and 9 in the prose; the
        // exhaustive count is the arbiter and the report flags the winner
        {"neopentane", 6, 11, 9, "theorem claims 11, prose claims 9"},
    };
    return table;
}

std::vector<ReportRow> alkane_report(const SearchOptions& opts) {
    std::vector<ReportRow> rows;
    for (const auto& expected : expected_alkane_table()) {
        Graph g = named_alkane(expected.name);
        auto result = restricted_optimal_number(g, 2, opts);

        ReportRow row;
        row.name = expected.name;
        row.expected_value = expected.pi2;
        row.expected_count = expected.p2;
        row.expected_count_alt = expected.p2_alt;
        row.computed_value = result.value;
        row.computed_count = result.count;

        std::uint64_t recount =
            detail::recount_level(g, result.value, std::min(2, result.value), opts);
        row.recount_verified = recount == result.count;

        bool value_ok = result.value == expected.pi2;
        bool count_ok = static_cast<std::int64_t>(result.count) == expected.p2;
        bool alt_ok = expected.p2_alt &&
                      static_cast<std::int64_t>(result.count) == *expected.p2_alt;
        row.status = (value_ok && count_ok) ? "match" : "mismatch";
        row.note = expected.note;
        if (expected.p2_alt) {
            if (count_ok)
                row.note += "; computed count confirms the theorem claim";
            else if (alt_ok)
                row.note += "; computed count confirms the prose claim";
            else
                row.note += "; computed count matches neither claim";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rpebble
