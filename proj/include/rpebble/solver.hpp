#pragma once

#include <cstdint>
#include <optional>

#include "rpebble/graph.hpp"
#include "rpebble/pebbling.hpp"

namespace rpebble {

struct SearchLimits {
    std::uint64_t node_budget = 10'000'000;  // distinct configurations visited per target
};

enum class SolveEngine {
    automatic,  // tree delivery DP when the graph is a tree, generic search otherwise
    generic,
    tree,
};

struct ReachResult {
    bool reachable = false;
    std::optional<Certificate> certificate;
    std::uint64_t visited = 0;
};

/// Exact decision: can some move sequence place a pebble on target?
/// Memoized depth-first search over configurations (weight strictly
/// decreases per move, so the state space is finite and acyclic).
/// Throws errc::budget_exceeded when limits.node_budget is exhausted.
ReachResult reachable_to(const Graph& g, const Config& f, int target,
                         const SearchLimits& limits = {}, bool want_certificate = false);

/// Maximum number of pebbles deliverable to target on a tree: root at the
/// target and fold m(v) = f(v) + sum_children floor(m(c)/2) bottom-up.
/// Solvable to target iff the result is >= 1.
long long tree_max_to(const Graph& tree, const Config& f, int target);

/// True iff every vertex is reachable. Requires a connected graph.
bool is_solvable(const Graph& g, const Config& f, const SearchLimits& limits = {},
                 SolveEngine engine = SolveEngine::automatic);

/// Per-graph precomputation for repeated tree_max_to calls: one reverse-BFS
/// fold order per target. Used heavily by the optimal-search sweeps.
class TreeDeliver {
public:
    explicit TreeDeliver(const Graph& tree);

    long long max_to(const Config& f, int target) const;

    // Hot path for enumeration sweeps; not safe for concurrent calls on one
    // instance (workers take their own copy).
    template <typename Counts>
    long long max_to_counts(const Counts& f, int target) const {
        const auto& ord = order_[target];
        const auto& par = parent_[target];
        long long result = 0;
        // reverse BFS order: every child is folded before its parent
        for (int i = static_cast<int>(ord.size()) - 1; i >= 0; --i) {
            int v = ord[i];
            long long acc = f[v] + pending_[v];
            pending_[v] = 0;
            if (v == target)
                result = acc;
            else
                pending_[par[v]] += acc / 2;
        }
        return result;
    }

    int order() const { return n_; }

private:
    int n_;
    std::vector<std::vector<int>> order_;   // BFS order per target
    std::vector<std::vector<int>> parent_;  // parent toward target
    mutable std::vector<long long> pending_;
};

}  // namespace rpebble
