#pragma once

#include <cstdint>
#include <vector>

#include "rpebble/graph.hpp"

namespace rpebble {

struct AutomorphismOptions {
    enum class Engine { automatic, explicit_enum, tree };
    Engine engine = Engine::automatic;
    int max_explicit_n = 20;                  // explicit enumeration size limit
    std::uint64_t max_group_size = 1'000'000;  // explicit list cap
};

struct AutomorphismSet {
    /// true: perms is the whole group (identity included). false: perms is a
    /// generating set and order was computed by the tree decomposition.
    bool explicit_form = true;
    std::vector<std::vector<int>> perms;
    std::uint64_t order = 1;
    std::vector<std::vector<int>> orbits;  // sorted partition of 0..n-1
};

/// Full automorphism group. The automatic engine uses the center-rooted
/// canonical decomposition for trees (never materializes factorial groups)
/// and pruned backtracking enumeration otherwise.
AutomorphismSet automorphisms(const Graph& g, const AutomorphismOptions& opts = {});

/// True iff mapping vertices through perm sends edges to edges.
bool is_automorphism(const Graph& g, const std::vector<int>& perm);

}  // namespace rpebble
