#include "rpebble/solver.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <unordered_set>

#include "rpebble/error.hpp"

namespace rpebble {

namespace {

struct ByteVecHash {
    std::size_t operator()(const std::vector<std::uint8_t>& v) const noexcept {
        // FNV-1a over the raw counts
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint8_t b : v) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

class GenericSearch {
public:
    GenericSearch(const Graph& g, std::uint64_t budget, bool want_certificate)
        : g_(g), budget_(budget), want_cert_(want_certificate) {}

    bool run(std::vector<std::uint8_t>& f, int target) {
        target_ = target;
        return dfs(f);
    }

    std::uint64_t visited() const { return visited_; }
    std::vector<Move> take_moves() { return std::move(trail_); }

private:
    bool dfs(std::vector<std::uint8_t>& f) {
        if (f[target_] >= 1) return true;
        if (!seen_.insert(f).second) return false;
        if (++visited_ > budget_)
            fail(errc::budget_exceeded, "reachable_to: node budget exhausted");
        for (int u = 0; u < g_.order(); ++u) {
            if (f[u] < 2) continue;
            for (int v : g_.neighbors(u)) {
                f[u] -= 2;
                f[v] += 1;
                bool ok = dfs(f);
                f[v] -= 1;
                f[u] += 2;
                if (ok) {
                    if (want_cert_) trail_.push_back({u, v});
                    return true;
                }
            }
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    bool want_cert_;
    int target_ = 0;
    std::uint64_t visited_ = 0;
    std::unordered_set<std::vector<std::uint8_t>, ByteVecHash> seen_;
    std::vector<Move> trail_;
};

std::vector<std::uint8_t> to_bytes(const Graph& g, const Config& f) {
    if (static_cast<int>(f.size()) != g.order())
        fail(errc::invalid_argument, "configuration length does not match graph order");
    long long w = 0;
    for (int c : f) {
        if (c < 0) fail(errc::invalid_argument, "configuration has a negative pebble count");
        w += c;
    }
    if (w > 255) fail(errc::unsupported, "configuration weight above the supported search range");
    return std::vector<std::uint8_t>(f.begin(), f.end());
}

}  // namespace

ReachResult reachable_to(const Graph& g, const Config& f, int target, const SearchLimits& limits,
                         bool want_certificate) {
    if (target < 0 || target >= g.order())
        fail(errc::invalid_argument, "reachable_to: target out of range");
    if (!is_connected(g)) fail(errc::invalid_argument, "reachable_to: graph must be connected");

    auto bytes = to_bytes(g, f);
    ReachResult res;
    if (bytes[target] >= 1) {
        res.reachable = true;
        if (want_certificate) res.certificate = Certificate{target, {}};
        return res;
    }
    GenericSearch search(g, limits.node_budget, want_certificate);
    res.reachable = search.run(bytes, target);
    res.visited = search.visited();
    if (res.reachable && want_certificate) {
        auto moves = search.take_moves();
        std::reverse(moves.begin(), moves.end());  // trail was recorded on unwind
        res.certificate = Certificate{target, std::move(moves)};
    }
    return res;
}

TreeDeliver::TreeDeliver(const Graph& tree) : n_(tree.order()) {
    auto meta = tree_meta(tree);
    if (!meta.is_tree) fail(errc::invalid_argument, "tree solver: input is not a tree");
    order_.resize(n_);
    parent_.resize(n_);
    pending_.assign(n_, 0);
    for (int t = 0; t < n_; ++t) {
        auto& ord = order_[t];
        auto& par = parent_[t];
        par.assign(n_, -1);
        ord.reserve(n_);
        ord.push_back(t);
        for (std::size_t i = 0; i < ord.size(); ++i) {
            int u = ord[i];
            for (int v : tree.neighbors(u)) {
                if (v != par[u] && v != t) {
                    par[v] = u;
                    ord.push_back(v);
                }
            }
        }
    }
}

long long TreeDeliver::max_to(const Config& f, int target) const {
    if (target < 0 || target >= n_) fail(errc::invalid_argument, "tree solver: target out of range");
    if (static_cast<int>(f.size()) != n_)
        fail(errc::invalid_argument, "configuration length does not match graph order");
    return max_to_counts(f, target);
}

long long tree_max_to(const Graph& tree, const Config& f, int target) {
    TreeDeliver solver(tree);
    return solver.max_to(f, target);
}

bool is_solvable(const Graph& g, const Config& f, const SearchLimits& limits, SolveEngine engine) {
    if (!is_connected(g)) fail(errc::invalid_argument, "is_solvable: graph must be connected");
    bool tree = g.size() == g.order() - 1;
    if (engine == SolveEngine::tree && !tree)
        fail(errc::invalid_argument, "is_solvable: tree engine requires a tree");
    bool use_tree = engine == SolveEngine::tree || (engine == SolveEngine::automatic && tree);

    if (use_tree) {
        TreeDeliver solver(g);
        for (int t = 0; t < g.order(); ++t)
            if (solver.max_to(f, t) < 1) return false;
        return true;
    }
    for (int t = 0; t < g.order(); ++t)
        if (!reachable_to(g, f, t, limits).reachable) return false;
    return true;
}

}  // namespace rpebble
