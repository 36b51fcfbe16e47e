#pragma once

#include <cstdint>
#include <vector>

#include "rpebble/automorphism.hpp"
#include "rpebble/graph.hpp"

namespace rpebble {

struct DistinguishingResult {
    int d = 0;                 // minimum color count
    std::vector<int> witness;  // vertex -> color in 1..d, preserved only by the identity
};

/// Exact count of labeled colorings vertex -> {1..r} preserved by no
/// nontrivial automorphism. Tree-only: rooted recursion at the center; a
/// class of m mutually isomorphic child subtrees with N distinguishing
/// colorings and rooted group order A contributes prod_{i<m} (N - i*A); an
/// edge center with isomorphic halves additionally requires the two half
/// colorings to be non-equivalent. Throws errc::limit_exceeded on overflow.
std::uint64_t count_distinguishing_colorings(const Graph& tree, int r);

/// D(g) with a verified witness coloring. Trees use the counting recursion
/// (any size); other connected graphs fall back to brute force against the
/// explicit group.
DistinguishingResult distinguishing_number(const Graph& g, const AutomorphismOptions& opts = {});

/// Tree-only check that colors (vertex -> 1..r) is a distinguishing
/// coloring: no two isomorphic sibling subtrees share a colored code and the
/// two halves of an edge center differ.
bool is_distinguishing_coloring(const Graph& tree, const std::vector<int>& colors);

}  // namespace rpebble
