#pragma once

#include <string>

#include "rpebble/graph.hpp"

namespace rpebble {

/// Decodes the standard graph6 format (6-bit chunks offset by 63, upper
/// triangle in column order). An optional ">>graph6<<" header is accepted.
Graph parse_graph6(const std::string& text);

/// Encodes g in graph6. Uses the single-byte size form for n <= 62 and the
/// 3-byte extended form up to n = 258047.
std::string emit_graph6(const Graph& g);

}  // namespace rpebble
