#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rpebble/graph.hpp"
#include "rpebble/pebbling.hpp"

namespace rpebble {

struct SearchOptions {
    int threads = 1;
    std::uint64_t node_budget = 10'000'000;  // generic reachability search, per target
    std::uint64_t enumeration_budget = 2'000'000'000;  // complete configurations per call
    std::uint64_t witness_limit = 100'000;
    bool prune = true;  // sound potential-based pruning; never changes results
};

struct WeightLevelStats {
    int weight = 0;
    std::uint64_t enumerated = 0;  // complete configurations reaching the exact check
    std::uint64_t solvable = 0;
};

struct OptimalResult {
    std::optional<int> t;  // nullopt: unrestricted (pi*)
    int value = 0;
    std::uint64_t count = 0;        // labeled count of solvable optimal configurations
    std::vector<Config> witnesses;  // ascending lexicographic
    bool truncated = false;
    std::vector<WeightLevelStats> levels;
    std::uint64_t examined = 0;
};

/// pi*_t(g) with the exact labeled count and the full witness list.
/// Sweeps weights w0, w0+1, ... completely; every level below the answer is
/// proved empty, so results are independent of thread count.
OptimalResult restricted_optimal_number(const Graph& g, int t, const SearchOptions& opts = {});

/// pi*(g): same sweep with the cap equal to the current weight.
OptimalResult optimal_number(const Graph& g, const SearchOptions& opts = {});

/// Every configuration with total weight w and all entries <= t, exactly
/// once, in descending lexicographic order of the count sequence.
class WeightConfigStream {
public:
    WeightConfigStream(int n, long long w, int t);
    bool next(Config& out);

private:
    int n_;
    int t_;
    bool done_ = false;
    bool first_ = true;
    std::vector<int> cur_;
};

/// Structural lower bound on pi*_t: 1 for K_1, else 2.
int lower_bound(const Graph& g, int t);

struct BoundsReport {
    int gamma = 0;
    int gamma_roman = 0;
    std::optional<int> gamma_total;            // empty when an isolated vertex exists
    int two_gamma = 0;
    std::optional<int> tree_n_minus_l_plus_1;  // trees with n >= 3
    std::optional<int> five_n_over_7;          // nontrivial trees
};

/// Domination-based upper bounds on pi*_2 plus the tree bounds.
BoundsReport upper_bound_report(const Graph& g);

struct MultiplicityProperties {
    int value = 0;
    std::uint64_t count = 0;
    bool has_witness_with_a_one = false;
    bool odd_value = false;
};

/// Derived from a full (untruncated) pi*_2 witness list.
MultiplicityProperties multiplicity_properties(const OptimalResult& result);
MultiplicityProperties multiplicity_properties(const Graph& g, const SearchOptions& opts = {});

namespace detail {
/// Level sweep in ascending enumeration order; used as the independent
/// recount pass. Returns the number of solvable configurations of weight w.
std::uint64_t recount_level(const Graph& g, long long w, int cap, const SearchOptions& opts);
}  // namespace detail

}  // namespace rpebble
