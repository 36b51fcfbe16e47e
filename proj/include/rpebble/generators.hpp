#pragma once

#include <string>
#include <vector>

#include "rpebble/graph.hpp"

namespace rpebble {

/// Path P_n on vertices 0..n-1 with edges (i, i+1).
Graph path(int n);

/// Radius-<=2 tree: vertex 0 is the root, carrying root_leaves leaf children
/// plus one internal child per entry c of child_leaf_counts, each bearing c
/// leaves. spider(m, {}) is the star K_{1,m}.
Graph spider(int root_leaves, const std::vector<int>& child_leaf_counts);

/// Straight-chain alkane C_nH_{2n+2}: carbon path 0..n-1, every carbon padded
/// with hydrogens to degree 4. Labels "C"/"H".
Graph alkane(int n);

/// Catalog entry: methane, ethane, propane, butane, pentane, isobutane,
/// isopentane, neopentane. Branched skeletons are hard-coded.
Graph named_alkane(const std::string& name);

const std::vector<std::string>& alkane_catalog_names();

/// Graph source mini-grammar used by the CLI and the C API:
///   "path:6", "spider:2,1,1" (root leaves, then child leaf counts),
///   "alkane:3", "named:neopentane", "g6:<graph6>", or a bare graph6 string.
Graph graph_from_spec(const std::string& spec);

}  // namespace rpebble
