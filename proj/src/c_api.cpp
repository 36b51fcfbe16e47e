#include "rpebble.h"

#include <cstring>
#include <new>
#include <string>

#include "rpebble/canonical.hpp"
#include "rpebble/distinguishing.hpp"
#include "rpebble/domination.hpp"
#include "rpebble/error.hpp"
#include "rpebble/generators.hpp"
#include "rpebble/graph6.hpp"
#include "rpebble/report.hpp"

struct rpeb_graph {
    rpebble::Graph g;
};

namespace {

thread_local std::string g_last_error;

rpeb_status status_from(const rpebble::Error& e) {
    switch (e.code()) {
        case rpebble::errc::invalid_argument: return RPEB_ERR_INVALID;
        case rpebble::errc::parse_error: return RPEB_ERR_PARSE;
        case rpebble::errc::unsupported: return RPEB_ERR_UNSUPPORTED;
        case rpebble::errc::budget_exceeded: return RPEB_ERR_BUDGET;
        case rpebble::errc::limit_exceeded: return RPEB_ERR_LIMIT;
    }
    return RPEB_ERR_INTERNAL;
}

template <typename Fn>
rpeb_status guarded(Fn&& fn) {
    try {
        fn();
        return RPEB_OK;
    } catch (const rpebble::Error& e) {
        g_last_error = e.what();
        return status_from(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RPEB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RPEB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rpebble::Config make_config(const rpeb_graph* g, const int32_t* config) {
    if (config == nullptr)
        rpebble::fail(rpebble::errc::invalid_argument, "configuration pointer is null");
    return rpebble::Config(config, config + g->g.order());
}

rpebble::SearchOptions make_options(const rpeb_search_options* opts) {
    rpebble::SearchOptions result;
    if (opts != nullptr) {
        result.node_budget = opts->node_budget;
        result.enumeration_budget = opts->enumeration_budget;
        result.witness_limit = opts->witness_limit;
        result.threads = opts->threads;
    }
    return result;
}

const rpebble::Graph& deref(const rpeb_graph* g) {
    if (g == nullptr) rpebble::fail(rpebble::errc::invalid_argument, "graph handle is null");
    return g->g;
}

}  // namespace

extern "C" {

void rpeb_search_options_init(rpeb_search_options* opts) {
    rpebble::SearchOptions defaults;
    opts->node_budget = defaults.node_budget;
    opts->enumeration_budget = defaults.enumeration_budget;
    opts->witness_limit = defaults.witness_limit;
    opts->threads = defaults.threads;
}

const char* rpeb_version(void) { return "1.0.0"; }

const char* rpeb_last_error(void) { return g_last_error.c_str(); }

void rpeb_string_free(char* s) { delete[] s; }

rpeb_status rpeb_graph_from_edges(int32_t n, const int32_t* pairs, int32_t m, rpeb_graph** out) {
    return guarded([&] {
        std::vector<std::pair<int, int>> edges;
        for (int32_t i = 0; i < m; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
        *out = new rpeb_graph{rpebble::Graph::from_edge_list(n, edges)};
    });
}

rpeb_status rpeb_graph_from_graph6(const char* text, rpeb_graph** out) {
    return guarded([&] { *out = new rpeb_graph{rpebble::parse_graph6(text)}; });
}

rpeb_status rpeb_graph_from_edge_text(const char* text, rpeb_graph** out) {
    return guarded([&] { *out = new rpeb_graph{rpebble::Graph::parse_edge_text(text)}; });
}

rpeb_status rpeb_graph_from_spec(const char* spec, rpeb_graph** out) {
    return guarded([&] { *out = new rpeb_graph{rpebble::graph_from_spec(spec)}; });
}

void rpeb_graph_free(rpeb_graph* g) { delete g; }

int32_t rpeb_graph_order(const rpeb_graph* g) { return g == nullptr ? -1 : g->g.order(); }

int32_t rpeb_graph_size(const rpeb_graph* g) { return g == nullptr ? -1 : g->g.size(); }

rpeb_status rpeb_graph_to_graph6(const rpeb_graph* g, char** out) {
    return guarded([&] { *out = dup_string(rpebble::emit_graph6(deref(g))); });
}

rpeb_status rpeb_graph_to_edge_text(const rpeb_graph* g, char** out) {
    return guarded([&] { *out = dup_string(deref(g).to_edge_text()); });
}

rpeb_status rpeb_is_solvable(const rpeb_graph* g, const int32_t* config, uint64_t node_budget,
                             int32_t* out_solvable) {
    return guarded([&] {
        rpebble::SearchLimits limits;
        if (node_budget) limits.node_budget = node_budget;
        *out_solvable = rpebble::is_solvable(deref(g), make_config(g, config), limits) ? 1 : 0;
    });
}

rpeb_status rpeb_reachable_to(const rpeb_graph* g, const int32_t* config, int32_t target,
                              uint64_t node_budget, int32_t* out_reachable,
                              char** out_certificate_json) {
    return guarded([&] {
        rpebble::SearchLimits limits;
        if (node_budget) limits.node_budget = node_budget;
        auto reach = rpebble::reachable_to(deref(g), make_config(g, config), target, limits,
                                           out_certificate_json != nullptr);
        *out_reachable = reach.reachable ? 1 : 0;
        if (out_certificate_json != nullptr) {
            *out_certificate_json =
                reach.certificate ? dup_string(rpebble::certificate_to_json(*reach.certificate))
                                  : nullptr;
        }
    });
}

rpeb_status rpeb_tree_max_to(const rpeb_graph* g, const int32_t* config, int32_t target,
                             int64_t* out_max) {
    return guarded(
        [&] { *out_max = rpebble::tree_max_to(deref(g), make_config(g, config), target); });
}

rpeb_status rpeb_verify_certificate(const rpeb_graph* g, const int32_t* config,
                                    const char* certificate_json, int32_t* out_valid,
                                    int32_t* out_failed_step) {
    return guarded([&] {
        auto cert = rpebble::certificate_from_json(certificate_json);
        auto verdict = rpebble::verify_certificate(deref(g), make_config(g, config), cert);
        *out_valid = verdict.ok ? 1 : 0;
        if (out_failed_step != nullptr) *out_failed_step = verdict.failed_step;
    });
}

rpeb_status rpeb_optimal_value(const rpeb_graph* g, int32_t t, const rpeb_search_options* opts,
                               int32_t* out_value, uint64_t* out_count) {
    return guarded([&] {
        auto options = make_options(opts);
        auto result = t <= 0 ? rpebble::optimal_number(deref(g), options)
                             : rpebble::restricted_optimal_number(deref(g), t, options);
        *out_value = result.value;
        if (out_count != nullptr) *out_count = result.count;
    });
}

rpeb_status rpeb_optimal_json(const rpeb_graph* g, int32_t t, const rpeb_search_options* opts,
                              char** out_json) {
    return guarded([&] {
        auto options = make_options(opts);
        auto result = t <= 0 ? rpebble::optimal_number(deref(g), options)
                             : rpebble::restricted_optimal_number(deref(g), t, options);
        *out_json = dup_string(rpebble::optimal_json(deref(g), result).dump(2) + "\n");
    });
}

rpeb_status rpeb_solve_json(const rpeb_graph* g, const int32_t* config, int32_t certificates,
                            uint64_t node_budget, char** out_json) {
    return guarded([&] {
        rpebble::SearchLimits limits;
        if (node_budget) limits.node_budget = node_budget;
        *out_json = dup_string(
            rpebble::solve_json(deref(g), make_config(g, config), certificates != 0, limits)
                .dump(2) +
            "\n");
    });
}

rpeb_status rpeb_verify_json(const rpeb_graph* g, const int32_t* config, int32_t target,
                             uint64_t node_budget, char** out_json) {
    return guarded([&] {
        rpebble::SearchLimits limits;
        if (node_budget) limits.node_budget = node_budget;
        *out_json = dup_string(
            rpebble::verify_json(deref(g), make_config(g, config), target, limits).dump(2) + "\n");
    });
}

rpeb_status rpeb_domination_number(const rpeb_graph* g, int32_t* out) {
    return guarded([&] { *out = rpebble::domination_number(deref(g)).first; });
}

rpeb_status rpeb_roman_domination_number(const rpeb_graph* g, int32_t* out) {
    return guarded([&] { *out = rpebble::roman_domination_number(deref(g)).first; });
}

rpeb_status rpeb_total_domination_number(const rpeb_graph* g, int32_t* out) {
    return guarded([&] { *out = rpebble::total_domination_number(deref(g)); });
}

rpeb_status rpeb_bounds_json(const rpeb_graph* g, char** out_json) {
    return guarded([&] {
        auto report = rpebble::upper_bound_report(deref(g));
        *out_json = dup_string(rpebble::bounds_json(deref(g), report).dump(2) + "\n");
    });
}

rpeb_status rpeb_automorphism_order(const rpeb_graph* g, uint64_t* out) {
    return guarded([&] { *out = rpebble::automorphisms(deref(g)).order; });
}

rpeb_status rpeb_distinguishing_number(const rpeb_graph* g, int32_t* out) {
    return guarded([&] { *out = rpebble::distinguishing_number(deref(g)).d; });
}

rpeb_status rpeb_count_distinguishing_colorings(const rpeb_graph* g, int32_t r, uint64_t* out) {
    return guarded([&] { *out = rpebble::count_distinguishing_colorings(deref(g), r); });
}

rpeb_status rpeb_symmetry_json(const rpeb_graph* g, char** out_json) {
    return guarded([&] {
        auto aut = rpebble::automorphisms(deref(g));
        auto dist = rpebble::distinguishing_number(deref(g));
        *out_json = dup_string(rpebble::symmetry_json(deref(g), aut, dist).dump(2) + "\n");
    });
}

rpeb_status rpeb_family_json(const rpeb_search_options* opts, char** out_json) {
    return guarded([&] {
        auto records = rpebble::enumerate_family(make_options(opts));
        auto check = rpebble::family_multiset_check(records);
        *out_json = dup_string(rpebble::family_report_json(records, check).dump(2) + "\n");
    });
}

rpeb_status rpeb_reproduce(const char* suite, const char* format,
                           const rpeb_search_options* opts, char** out) {
    return guarded([&] {
        *out = dup_string(rpebble::reproduce(suite, format, make_options(opts)));
    });
}

}  // extern "C"
