#include "rpebble/pebbling.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

#include "rpebble/error.hpp"

namespace rpebble {

long long weight(const Config& f) {
    return std::accumulate(f.begin(), f.end(), 0LL);
}

bool is_t_restricted(const Config& f, int t) {
    for (int c : f)
        if (c > t) return false;
    return true;
}

Config apply_move(const Graph& g, const Config& f, Move m) {
    if (m.from < 0 || m.from >= g.order() || m.to < 0 || m.to >= g.order())
        fail(errc::invalid_argument, "apply_move: vertex out of range");
    if (!g.adjacent(m.from, m.to))
        fail(errc::invalid_argument, "apply_move: " + std::to_string(m.from) + " and " +
                                         std::to_string(m.to) + " are not adjacent");
    if (f[m.from] < 2)
        fail(errc::invalid_argument,
             "apply_move: fewer than two pebbles on vertex " + std::to_string(m.from));
    Config r = f;
    r[m.from] -= 2;
    r[m.to] += 1;
    return r;
}

ReplayResult verify_certificate(const Graph& g, const Config& f, const Certificate& cert) {
    if (cert.target < 0 || cert.target >= g.order()) return {false, -1};
    if (static_cast<int>(f.size()) != g.order()) return {false, -1};
    Config cur = f;
    for (int i = 0; i < static_cast<int>(cert.moves.size()); ++i) {
        Move m = cert.moves[i];
        bool legal = m.from >= 0 && m.from < g.order() && m.to >= 0 && m.to < g.order() &&
                     g.adjacent(m.from, m.to) && cur[m.from] >= 2;
        if (!legal) return {false, i};
        cur[m.from] -= 2;
        cur[m.to] += 1;
    }
    if (cur[cert.target] < 1) return {false, static_cast<int>(cert.moves.size())};
    return {true, -1};
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["target"] = cert.target;
    auto moves = nlohmann::ordered_json::array();
    for (const auto& m : cert.moves) moves.push_back({m.from, m.to});
    j["moves"] = moves;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("certificate: ") + e.what());
    }
    if (!j.is_object() || !j.contains("target") || !j.contains("moves"))
        fail(errc::parse_error, "certificate: expected {target, moves}");
    Certificate cert;
    cert.target = j["target"].get<int>();
    for (const auto& m : j["moves"]) {
        if (!m.is_array() || m.size() != 2)
            fail(errc::parse_error, "certificate: each move must be a [from, to] pair");
        cert.moves.push_back({m[0].get<int>(), m[1].get<int>()});
    }
    return cert;
}

}  // namespace rpebble
