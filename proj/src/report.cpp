#include "rpebble/report.hpp"

#include <sstream>

#include "rpebble/canonical.hpp"
#include "rpebble/domination.hpp"
#include "rpebble/error.hpp"
#include "rpebble/generators.hpp"

namespace rpebble {

using nlohmann::ordered_json;

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (g.has_labels()) {
        auto labels = ordered_json::array();
        for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
        j["labels"] = labels;
    }
    return j;
}

ordered_json optimal_json(const Graph& g, const OptimalResult& result) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    if (result.t)
        j["t"] = *result.t;
    else
        j["t"] = nullptr;
    j["value"] = result.value;
    j["count"] = result.count;
    auto witnesses = ordered_json::array();
    for (const auto& wit : result.witnesses) witnesses.push_back(wit);
    j["witnesses"] = witnesses;
    j["truncated"] = result.truncated;
    ordered_json stats;
    auto levels = ordered_json::array();
    for (const auto& level : result.levels) {
        ordered_json lj;
        lj["weight"] = level.weight;
        lj["enumerated"] = level.enumerated;
        lj["solvable"] = level.solvable;
        levels.push_back(lj);
    }
    stats["levels"] = levels;
    stats["examined"] = result.examined;
    j["stats"] = stats;
    return j;
}

ordered_json bounds_json(const Graph& g, const BoundsReport& report) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    j["gamma"] = report.gamma;
    j["gamma_R"] = report.gamma_roman;
    if (report.gamma_total)
        j["gamma_t"] = *report.gamma_total;
    else
        j["gamma_t"] = nullptr;
    j["two_gamma"] = report.two_gamma;
    if (report.tree_n_minus_l_plus_1) j["n_minus_l_plus_1"] = *report.tree_n_minus_l_plus_1;
    if (report.five_n_over_7) j["five_n_over_7"] = *report.five_n_over_7;
    return j;
}

ordered_json symmetry_json(const Graph& g, const AutomorphismSet& aut,
                           const DistinguishingResult& dist) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    j["order"] = aut.order;
    j["engine"] = aut.explicit_form ? "explicit" : "tree";
    auto orbits = ordered_json::array();
    for (const auto& orbit : aut.orbits) orbits.push_back(orbit);
    j["orbits"] = orbits;
    j["distinguishing"] = dist.d;
    j["witness"] = dist.witness;
    return j;
}

ordered_json solve_json(const Graph& g, const Config& f, bool certificates,
                        const SearchLimits& limits) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    j["config"] = f;
    auto targets = ordered_json::array();
    bool all = true;
    for (int t = 0; t < g.order(); ++t) {
        auto reach = reachable_to(g, f, t, limits, certificates);
        all = all && reach.reachable;
        ordered_json tj;
        tj["target"] = t;
        tj["reachable"] = reach.reachable;
        if (certificates && reach.certificate) {
            auto verdict = verify_certificate(g, f, *reach.certificate);
            ordered_json cj;
            cj["target"] = reach.certificate->target;
            auto moves = ordered_json::array();
            for (const auto& m : reach.certificate->moves) moves.push_back({m.from, m.to});
            cj["moves"] = moves;
            tj["certificate"] = cj;
            tj["verified"] = verdict.ok;
        }
        targets.push_back(tj);
    }
    j["solvable"] = all;
    j["targets"] = targets;
    return j;
}

ordered_json verify_json(const Graph& g, const Config& f, int target, const SearchLimits& limits) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    j["config"] = f;
    j["target"] = target;
    auto reach = reachable_to(g, f, target, limits, /*want_certificate=*/true);
    j["reachable"] = reach.reachable;
    if (reach.certificate) {
        auto verdict = verify_certificate(g, f, *reach.certificate);
        ordered_json cj;
        cj["target"] = reach.certificate->target;
        auto moves = ordered_json::array();
        for (const auto& m : reach.certificate->moves) moves.push_back({m.from, m.to});
        cj["moves"] = moves;
        j["certificate"] = cj;
        j["verified"] = verdict.ok;
    }
    return j;
}

namespace {

ordered_json family_record_json(const FamilyRecord& rec) {
    ordered_json j;
    j["code"] = rec.canonical_code;
    j["n"] = rec.n;
    j["l"] = rec.leaf_count;
    j["radius"] = rec.radius;
    j["D"] = rec.d;
    j["pi_star"] = rec.pi_star;
    j["pi2"] = rec.pi2;
    j["p2"] = rec.p2;
    j["gamma"] = rec.bounds.gamma;
    j["gamma_R"] = rec.bounds.gamma_roman;
    return j;
}

std::string csv_header() {
    return "name,n,l,radius,D,pi_star,pi2,p2,gamma,gamma_R,status";
}

}  // namespace

ordered_json family_report_json(const std::vector<FamilyRecord>& records,
                                const FamilyCheck& check) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["size"] = records.size();
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto rj = family_record_json(records[i]);
        rj["p2_in_published_multiset"] = check.record_matched[i];
        rows.push_back(rj);
    }
    j["records"] = rows;
    ordered_json cj;
    cj["all_bounds_hold"] = check.all_bounds_hold;
    cj["violations"] = check.violations;
    cj["computed_p2_multiset"] = check.computed_multiset;
    cj["published_p2_multiset"] = published_family_p2_multiset();
    cj["missing"] = check.missing;
    cj["extra"] = check.extra;
    cj["multiset_match"] = check.multiset_match;
    j["check"] = cj;
    return j;
}

std::string family_report_csv(const std::vector<FamilyRecord>& records, const FamilyCheck& check) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        out << rec.canonical_code << ',' << rec.n << ',' << rec.leaf_count << ',' << rec.radius
            << ',' << rec.d << ',' << rec.pi_star << ',' << rec.pi2 << ',' << rec.p2 << ','
            << rec.bounds.gamma << ',' << rec.bounds.gamma_roman << ','
            << (check.record_matched[i] ? "match" : "mismatch") << '\n';
    }
    return out.str();
}

namespace {

struct SuiteRow {
    std::string name;
    Graph graph;
    int pi_star;
    ReportRow row;
};

std::string alkanes_csv(const std::vector<SuiteRow>& rows) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& sr : rows) {
        auto meta = tree_meta(sr.graph);
        auto bounds = upper_bound_report(sr.graph);
        out << sr.name << ',' << sr.graph.order() << ',' << meta.leaf_count << ','
            << *meta.radius << ',' << distinguishing_number(sr.graph).d << ',' << sr.pi_star
            << ',' << sr.row.computed_value << ',' << sr.row.computed_count << ',' << bounds.gamma
            << ',' << bounds.gamma_roman << ',' << sr.row.status << '\n';
    }
    return out.str();
}

ordered_json report_row_json(const ReportRow& row) {
    ordered_json j;
    j["name"] = row.name;
    if (row.expected_value) j["expected_value"] = *row.expected_value;
    if (row.expected_count) j["expected_count"] = *row.expected_count;
    if (row.expected_count_alt) j["expected_count_alt"] = *row.expected_count_alt;
    j["computed_value"] = row.computed_value;
    j["computed_count"] = row.computed_count;
    j["status"] = row.status;
    if (!row.note.empty()) j["note"] = row.note;
    j["recount_verified"] = row.recount_verified;
    return j;
}

std::string reproduce_alkanes(const std::string& format, const SearchOptions& opts) {
    auto rows = alkane_report(opts);
    std::vector<SuiteRow> suite;
    for (auto& row : rows) {
        Graph g = named_alkane(row.name);
        int pi_star = optimal_number(g, opts).value;
        suite.push_back({row.name, std::move(g), pi_star, std::move(row)});
    }
    if (format == "csv") return alkanes_csv(suite);
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["suite"] = "alkanes";
    auto rj = ordered_json::array();
    bool all_match = true;
    for (const auto& sr : suite) {
        auto row = report_row_json(sr.row);
        row["pi_star"] = sr.pi_star;
        all_match = all_match && sr.row.status == "match";
        rj.push_back(row);
    }
    j["rows"] = rj;
    j["all_match"] = all_match;
    return j.dump(2) + "\n";
}

std::string reproduce_family(const std::string& format, const SearchOptions& opts) {
    auto records = enumerate_family(opts);
    auto check = family_multiset_check(records);
    if (format == "csv") return family_report_csv(records, check);
    return family_report_json(records, check).dump(2) + "\n";
}

std::string reproduce_paths(const std::string& format, const SearchOptions& opts) {
    struct PathRow {
        int n;
        int expected;
        OptimalResult result;
    };
    std::vector<PathRow> rows;
    for (int n = 1; n <= 30; ++n) {
        Graph g = path(n);
        auto result = restricted_optimal_number(g, 2, opts);
        rows.push_back({n, (2 * n + 2) / 3, std::move(result)});
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "name,n,expected_pi2,pi2,p2,status\n";
        for (const auto& row : rows)
            out << "P_" << row.n << ',' << row.n << ',' << row.expected << ',' << row.result.value
                << ',' << row.result.count << ','
                << (row.result.value == row.expected ? "match" : "mismatch") << '\n';
        return out.str();
    }
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["suite"] = "paths";
    auto rj = ordered_json::array();
    bool all_match = true;
    for (const auto& row : rows) {
        ordered_json pj;
        pj["name"] = "P_" + std::to_string(row.n);
        pj["n"] = row.n;
        pj["expected_value"] = row.expected;
        pj["computed_value"] = row.result.value;
        pj["computed_count"] = row.result.count;
        bool match = row.result.value == row.expected;
        pj["status"] = match ? "match" : "mismatch";
        all_match = all_match && match;
        rj.push_back(pj);
    }
    j["rows"] = rj;
    j["all_match"] = all_match;
    return j.dump(2) + "\n";
}

}  // namespace

std::string reproduce(const std::string& suite, const std::string& format,
                      const SearchOptions& opts) {
    if (format != "json" && format != "csv")
        fail(errc::invalid_argument, "reproduce: format must be json or csv");
    if (suite == "alkanes") return reproduce_alkanes(format, opts);
    if (suite == "family") return reproduce_family(format, opts);
    if (suite == "paths") return reproduce_paths(format, opts);
    fail(errc::invalid_argument, "reproduce: unknown suite \"" + suite + "\"");
}

}  // namespace rpebble
