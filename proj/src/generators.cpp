#include "rpebble/generators.hpp"

#include <algorithm>
#include <charconv>

#include "rpebble/error.hpp"
#include "rpebble/graph6.hpp"

namespace rpebble {

Graph path(int n) {
    if (n < 1) fail(errc::invalid_argument, "path: order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph spider(int root_leaves, const std::vector<int>& child_leaf_counts) {
    if (root_leaves < 0) fail(errc::invalid_argument, "spider: negative root leaf count");
    for (int c : child_leaf_counts)
        if (c < 1) fail(errc::invalid_argument, "spider: child leaf counts must be at least 1");

    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < root_leaves; ++i) edges.emplace_back(0, next++);
    for (int c : child_leaf_counts) {
        int internal = next++;
        edges.emplace_back(0, internal);
        for (int i = 0; i < c; ++i) edges.emplace_back(internal, next++);
    }
    return Graph::from_edge_list(next, edges);
}

namespace {

// Pads every carbon of the given skeleton with hydrogens up to degree 4.
Graph hydrogenate(int carbons, const std::vector<std::pair<int, int>>& skeleton) {
    std::vector<int> degree(carbons, 0);
    for (auto [u, v] : skeleton) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<std::pair<int, int>> edges = skeleton;
    std::vector<std::string> labels(carbons, "C");
    int next = carbons;
    for (int c = 0; c < carbons; ++c) {
        if (degree[c] > 4) fail(errc::invalid_argument, "alkane skeleton: carbon degree above 4");
        for (int h = degree[c]; h < 4; ++h) {
            edges.emplace_back(c, next++);
            labels.push_back("H");
        }
    }
    return Graph::from_edge_list(next, edges, std::move(labels));
}

}  // namespace

Graph alkane(int n) {
    if (n < 1) fail(errc::invalid_argument, "alkane: carbon count must be at least 1");
    std::vector<std::pair<int, int>> skeleton;
    for (int i = 0; i + 1 < n; ++i) skeleton.emplace_back(i, i + 1);
    return hydrogenate(n, skeleton);
}

Graph named_alkane(const std::string& name) {
    if (name == "methane") return alkane(1);
    if (name == "ethane") return alkane(2);
    if (name == "propane") return alkane(3);
    if (name == "butane") return alkane(4);
    if (name == "pentane") return alkane(5);
    // 2-methylpropane: carbon star K_{1,3}
    if (name == "isobutane") return hydrogenate(4, {{0, 1}, {0, 2}, {0, 3}});
    // 2-methylbutane: chain 0-1-2-3 with a methyl carbon on 1
    if (name == "isopentane") return hydrogenate(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
    // 2,2-dimethylpropane: carbon star K_{1,4}
    if (name == "neopentane") return hydrogenate(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    fail(errc::invalid_argument, "unknown alkane name: " + name);
}

const std::vector<std::string>& alkane_catalog_names() {
    static const std::vector<std::string> names = {"methane",   "ethane",     "propane",
                                                   "butane",    "pentane",    "isobutane",
                                                   "isopentane", "neopentane"};
    return names;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(errc::parse_error, "graph spec: bad " + what + " \"" + s + "\"");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Graph graph_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string args = spec.substr(colon + 1);
        if (kind == "path") return path(parse_int(args, "path order"));
        if (kind == "alkane") return alkane(parse_int(args, "carbon count"));
        if (kind == "named") return named_alkane(args);
        if (kind == "g6") return parse_graph6(args);
        if (kind == "spider") {
            auto parts = split(args, ',');
            if (parts.empty()) fail(errc::parse_error, "graph spec: spider needs a root leaf count");
            int root_leaves = parse_int(parts[0], "spider root leaf count");
            std::vector<int> children;
            for (std::size_t i = 1; i < parts.size(); ++i)
                children.push_back(parse_int(parts[i], "spider child leaf count"));
            return spider(root_leaves, children);
        }
        fail(errc::parse_error, "graph spec: unknown kind \"" + kind + "\"");
    }
    return parse_graph6(spec);
}

}  // namespace rpebble
