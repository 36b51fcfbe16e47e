#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpebble/graph.hpp"

namespace rpebble {

/// Pebble counts, dense over vertices 0..n-1.
using Config = std::vector<int>;

struct Move {
    int from = 0;
    int to = 0;
    bool operator==(const Move&) const = default;
};

/// Per-target move sequence witnessing reachability.
struct Certificate {
    int target = 0;
    std::vector<Move> moves;
};

long long weight(const Config& f);

/// True iff f(u) <= t for every vertex (the cap applies to the initial
/// configuration only, never to intermediate states of a move sequence).
bool is_t_restricted(const Config& f, int t);

/// One pebbling move: remove two pebbles from m.from, add one to the
/// adjacent m.to. Throws on insufficient pebbles or non-adjacent endpoints.
Config apply_move(const Graph& g, const Config& f, Move m);

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;  // index of the first illegal move, -1 when ok
};

/// Replays cert.moves from f; ok iff every move is legal and the final
/// configuration has at least one pebble on cert.target.
ReplayResult verify_certificate(const Graph& g, const Config& f, const Certificate& cert);

/// JSON object {"target": v, "moves": [[from, to], ...]}.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace rpebble
