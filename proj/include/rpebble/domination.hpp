#pragma once

#include <utility>
#include <vector>

#include "rpebble/graph.hpp"

namespace rpebble {

struct DominatingSet {
    std::vector<int> members;
};

struct RomanFunction {
    std::vector<int> values;  // vertex -> {0,1,2}; every 0 has a 2-neighbor
};

/// Exact gamma(g) with a witness, branch and bound over closed
/// neighborhoods. Budget: n <= 32.
std::pair<int, DominatingSet> domination_number(const Graph& g);

/// Exact gamma_R(g) with a witness function. DFS assignment in
/// degree-descending order with a coverage-deficit bound.
std::pair<int, RomanFunction> roman_domination_number(const Graph& g);

/// Exact total domination number; requires no isolated vertex.
int total_domination_number(const Graph& g);

bool is_dominating_set(const Graph& g, const std::vector<int>& members);
bool is_roman_function(const Graph& g, const std::vector<int>& values);
bool is_total_dominating_set(const Graph& g, const std::vector<int>& members);

}  // namespace rpebble
