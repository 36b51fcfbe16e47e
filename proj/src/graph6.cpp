#include "rpebble/graph6.hpp"

#include <cstdint>

#include "rpebble/error.hpp"

namespace rpebble {

namespace {

constexpr const char* kHeader = ">>graph6<<";

[[noreturn]] void parse_fail(std::size_t offset, const std::string& why) {
    fail(errc::parse_error, "graph6: " + why + " at byte " + std::to_string(offset));
}

int chunk_at(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) parse_fail(pos, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) parse_fail(pos, "byte outside printable graph6 range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) fail(errc::parse_error, "graph6: empty input at byte 0");

    std::size_t pos = 0;
    long long n;
    if (chunk_at(s, 0) < 63) {
        n = chunk_at(s, 0);
        pos = 1;
    } else if (s.size() >= 2 && chunk_at(s, 1) < 63) {
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | chunk_at(s, i);
        pos = 4;
    } else {
        n = 0;
        for (int i = 2; i <= 7; ++i) n = (n << 6) | chunk_at(s, i);
        pos = 8;
    }
    if (n < 1) parse_fail(0, "vertex count must be at least 1");
    if (n > 100000) parse_fail(0, "vertex count too large");

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        parse_fail(s.size(), "expected " + std::to_string(need) + " adjacency bytes, got " +
                                 std::to_string(s.size() - pos));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = chunk_at(s, pos + static_cast<std::size_t>(bit / 6));
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        fail(errc::unsupported, "graph6: order beyond the 3-byte size form");
    }

    long long bits = n * (n - 1) / 2;
    std::vector<std::uint8_t> chunks(static_cast<std::size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j))
                chunks[static_cast<std::size_t>(bit / 6)] |= static_cast<std::uint8_t>(1 << (5 - bit % 6));
        }
    }
    for (auto c : chunks) out.push_back(static_cast<char>(c + 63));
    return out;
}

}  // namespace rpebble
