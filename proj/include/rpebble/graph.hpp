#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rpebble {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// safe to share across threads. Labels are optional metadata with no effect
/// on any computation.
class Graph {
public:
    Graph() = default;  // empty placeholder; real graphs come from the factories

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                                std::vector<std::string> labels = {});
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Parses the plain edge-list text format: first non-comment line "n m",
    /// then m lines "u v". Lines starting with '#' are comments.
    static Graph parse_edge_text(const std::string& text);
    std::string to_edge_text() const;

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;        // sorted neighbor lists
    std::vector<std::string> labels_;          // empty if unlabeled
};

/// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

/// All-pairs distances via n BFS runs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

struct TreeMeta {
    bool is_tree = false;
    std::optional<int> radius;  // empty when g is disconnected
    std::vector<int> center;    // argmin-eccentricity set; size 1 or 2 for trees
    int leaf_count = 0;         // vertices of degree exactly 1
};

TreeMeta tree_meta(const Graph& g);

}  // namespace rpebble
