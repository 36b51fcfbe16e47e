#pragma once

#include <string>
#include <vector>

#include "rpebble/graph.hpp"

namespace rpebble {

/// AHU code of the subtree hanging off v when the tree is rooted so that
/// parent precedes v (parent = -1 roots the whole tree at v). Codes of
/// isomorphic rooted subtrees are equal.
std::string rooted_code(const Graph& tree, int v, int parent);

/// Canonical form of an unrooted tree, rooted at its center; a two-vertex
/// center is handled by ordering the two half codes. Equal codes iff the
/// trees are isomorphic.
std::string canonical_code(const Graph& tree);

/// Centers of a tree (1 or 2 vertices). Throws on non-trees.
std::vector<int> tree_center(const Graph& tree);

}  // namespace rpebble
