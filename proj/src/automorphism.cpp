#include "rpebble/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rpebble/error.hpp"
#include "rooted_tree.hpp"

namespace rpebble {

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) return false;
    std::vector<bool> hit(g.order(), false);
    for (int p : perm) {
        if (p < 0 || p >= g.order() || hit[p]) return false;
        hit[p] = true;
    }
    for (auto [u, v] : g.edges())
        if (!g.adjacent(perm[u], perm[v])) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> orbits_from_perms(int n, const std::vector<std::vector<int>>& perms) {
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& p : perms)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(p[v]);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : groups) orbits.push_back(std::move(members));
    return orbits;
}

class ExplicitEnumerator {
public:
    ExplicitEnumerator(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {
        perm_.assign(g.order(), -1);
        used_.assign(g.order(), false);
    }

    std::vector<std::vector<int>> run() {
        extend(0);
        return std::move(found_);
    }

private:
    void extend(int v) {
        int n = g_.order();
        if (v == n) {
            if (found_.size() >= cap_)
                fail(errc::limit_exceeded, "automorphisms: explicit group size limit exceeded");
            found_.push_back(perm_);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used_[w] || g_.degree(w) != g_.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g_.adjacent(u, v) != g_.adjacent(perm_[u], w)) ok = false;
            if (!ok) continue;
            perm_[v] = w;
            used_[w] = true;
            extend(v + 1);
            used_[w] = false;
            perm_[v] = -1;
        }
    }

    const Graph& g_;
    std::uint64_t cap_;
    std::vector<int> perm_;
    std::vector<bool> used_;
    std::vector<std::vector<int>> found_;
};

// ---- tree engine ------------------------------------------------------

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::limit_exceeded, "automorphisms: group order overflows 64 bits");
    return r;
}

std::uint64_t rooted_order(const detail::RootedView& view, int v) {
    std::uint64_t result = 1;
    for (auto [b, e] : view.classes[v]) {
        for (int i = b; i < e; ++i)
            result = checked_mul(result, rooted_order(view, view.children[v][i]));
        for (int m = 2; m <= e - b; ++m)
            result = checked_mul(result, static_cast<std::uint64_t>(m));
    }
    return result;
}

// Extends perm with the isomorphism subtree(a) -> subtree(b) given by
// pairing equal-code children in sorted order.
void map_subtree(const detail::RootedView& view, int a, int b, std::vector<int>& perm) {
    perm[a] = b;
    const auto& ca = view.children[a];
    const auto& cb = view.children[b];
    for (std::size_t i = 0; i < ca.size(); ++i) map_subtree(view, ca[i], cb[i], perm);
}

void collect_generators(const detail::RootedView& view, int v,
                        std::vector<std::vector<int>>& gens) {
    for (auto [b, e] : view.classes[v]) {
        const auto& ch = view.children[v];
        for (int i = b; i + 1 < e; ++i) {
            std::vector<int> perm(view.n);
            std::iota(perm.begin(), perm.end(), 0);
            map_subtree(view, ch[i], ch[i + 1], perm);
            map_subtree(view, ch[i + 1], ch[i], perm);
            gens.push_back(std::move(perm));
        }
        for (int i = b; i < e; ++i) collect_generators(view, ch[i], gens);
    }
}

std::vector<std::vector<int>> tree_orbits(const detail::RootedView& view) {
    // top-down signatures: orbit(v) is determined by (orbit(parent), code(v))
    int ids = static_cast<int>(view.parent.size());
    std::vector<int> sig(ids, -1);
    std::map<std::pair<int, std::string>, int> sig_ids;
    std::vector<int> bfs;
    sig[view.root] = 0;
    int next_sig = 1;
    bfs.push_back(view.root);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        int u = bfs[i];
        for (int c : view.children[u]) {
            auto key = std::make_pair(sig[u], view.code[c]);
            auto it = sig_ids.find(key);
            if (it == sig_ids.end()) it = sig_ids.emplace(key, next_sig++).first;
            sig[c] = it->second;
            bfs.push_back(c);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < view.n; ++v) groups[sig[v]].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [s, members] : groups) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

AutomorphismSet tree_automorphisms(const Graph& g) {
    auto view = detail::build_rooted_view(g);
    AutomorphismSet result;
    result.explicit_form = false;
    result.order = rooted_order(view, view.root);
    collect_generators(view, view.root, result.perms);
    result.orbits = tree_orbits(view);
    return result;
}

}  // namespace

AutomorphismSet automorphisms(const Graph& g, const AutomorphismOptions& opts) {
    using Engine = AutomorphismOptions::Engine;
    bool tree = is_connected(g) && g.size() == g.order() - 1;

    if (opts.engine == Engine::tree) {
        if (!tree) fail(errc::invalid_argument, "automorphisms: tree engine requires a tree");
        return tree_automorphisms(g);
    }
    if (opts.engine == Engine::automatic && tree) return tree_automorphisms(g);

    if (g.order() > opts.max_explicit_n)
        fail(errc::limit_exceeded, "automorphisms: order " + std::to_string(g.order()) +
                                       " above the explicit enumeration limit " +
                                       std::to_string(opts.max_explicit_n));
    AutomorphismSet result;
    result.explicit_form = true;
    result.perms = ExplicitEnumerator(g, opts.max_group_size).run();
    result.order = result.perms.size();
    result.orbits = orbits_from_perms(g.order(), result.perms);
    return result;
}

}  // namespace rpebble
