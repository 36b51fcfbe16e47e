#include "rpebble/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "rpebble/error.hpp"

namespace rpebble {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                            std::vector<std::string> labels) {
    if (n < 1) fail(errc::invalid_argument, "graph order must be at least 1");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        fail(errc::invalid_argument, "label list length does not match vertex count");

    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u == v)
            fail(errc::invalid_argument,
                 "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(errc::invalid_argument,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside 0.." + std::to_string(n - 1));
        dedup.insert({std::min(u, v), std::max(u, v)});
    }

    Graph g;
    g.n_ = n;
    g.edges_.assign(dedup.begin(), dedup.end());
    g.adj_.resize(n);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[v];
}

Graph Graph::parse_edge_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                fail(errc::parse_error, "edge list: bad header at line " + std::to_string(lineno));
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            fail(errc::parse_error, "edge list: bad edge at line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) fail(errc::parse_error, "edge list: missing header line \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        fail(errc::parse_error, "edge list: header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    return from_edge_list(n, edges);
}

std::string Graph::to_edge_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

TreeMeta tree_meta(const Graph& g) {
    TreeMeta meta;
    bool connected = is_connected(g);
    meta.is_tree = connected && g.size() == g.order() - 1;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++meta.leaf_count;
    if (!connected) return meta;  // radius undefined, center empty

    int best = -1;
    std::vector<int> ecc(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        ecc[v] = *std::max_element(dist.begin(), dist.end());
        if (best < 0 || ecc[v] < best) best = ecc[v];
    }
    meta.radius = best;
    for (int v = 0; v < g.order(); ++v)
        if (ecc[v] == best) meta.center.push_back(v);
    return meta;
}

}  // namespace rpebble
