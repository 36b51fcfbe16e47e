#include "rpebble/distinguishing.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "rpebble/error.hpp"
#include "rooted_tree.hpp"

namespace rpebble {

namespace {

using u128 = unsigned __int128;
constexpr u128 kU64Max = ~std::uint64_t{0};

u128 mul_guard(u128 a, u128 b) {
    if (a != 0 && b > (~u128{0}) / a)
        fail(errc::limit_exceeded, "count_distinguishing_colorings: count overflow");
    return a * b;
}

struct SubtreeCount {
    u128 n;  // distinguishing colorings of the rooted subtree
    u128 a;  // rooted automorphism group order
};

SubtreeCount rooted_count(const detail::RootedView& view, int v, int r) {
    u128 n = r;
    u128 a = 1;
    for (auto [b, e] : view.classes[v]) {
        int m = e - b;
        auto sub = rooted_count(view, view.children[v][b], r);  // class members are isomorphic
        for (int i = 0; i < m; ++i) {
            u128 used = mul_guard(sub.a, static_cast<u128>(i));
            if (sub.n <= used) return {0, 0};  // class cannot be told apart with r colors
            n = mul_guard(n, sub.n - used);
        }
        for (int i = 1; i <= m; ++i) a = mul_guard(a, static_cast<u128>(i));
        for (int i = 0; i < m; ++i) a = mul_guard(a, sub.a);
    }
    return {n, a};
}

u128 tree_count(const detail::RootedView& view, int r) {
    if (!view.virtual_root) return rooted_count(view, view.root, r).n;
    int ha = view.children[view.root][0];
    int hb = view.children[view.root][1];
    auto ca = rooted_count(view, ha, r);
    if (view.code[ha] != view.code[hb]) {
        auto cb = rooted_count(view, hb, r);
        return mul_guard(ca.n, cb.n);
    }
    // isomorphic halves: kill the edge swap by forcing inequivalent halves;
    // each distinguishing half coloring rules out exactly A partners
    if (ca.n <= ca.a) return 0;
    return mul_guard(ca.n, ca.n - ca.a);
}

// ---- witness construction ---------------------------------------------

struct WitnessBuilder {
    const Graph& tree;
    const detail::RootedView& view;
    int r;
    std::vector<int> colors;

    std::string colored_code(int v) const {
        std::vector<std::string> child_codes;
        for (int c : view.children[v]) child_codes.push_back(colored_code(c));
        std::sort(child_codes.begin(), child_codes.end());
        std::string code = "(" + std::to_string(colors[v]) + ":";
        for (const auto& cc : child_codes) code += cc;
        code += ")";
        return code;
    }

    // Enumerates distinguishing colorings of subtree(v) in deterministic
    // order; visit() returns true to stop at the current one.
    bool enumerate(int v, const std::function<bool()>& visit) {
        for (int c = 1; c <= r; ++c) {
            colors[v] = c;
            if (descend_class(v, 0, visit)) return true;
        }
        colors[v] = 0;
        return false;
    }

    bool descend_class(int v, std::size_t k, const std::function<bool()>& visit) {
        if (k == view.classes[v].size()) return visit();
        auto [b, e] = view.classes[v][k];
        std::vector<std::string> taken;
        return fill_member(v, k, b, e, taken, visit);
    }

    bool fill_member(int v, std::size_t k, int i, int e, std::vector<std::string>& taken,
                     const std::function<bool()>& visit) {
        if (i == e) return descend_class(v, k + 1, visit);
        int child = view.children[v][i];
        return enumerate(child, [&]() {
            std::string code = colored_code(child);
            if (std::find(taken.begin(), taken.end(), code) != taken.end()) return false;
            taken.push_back(code);
            bool done = fill_member(v, k, i + 1, e, taken, visit);
            if (!done) taken.pop_back();
            return done;
        });
    }

    bool build() {
        colors.assign(view.n, 0);
        if (!view.virtual_root) return enumerate(view.root, [] { return true; });
        int ha = view.children[view.root][0];
        int hb = view.children[view.root][1];
        bool iso = view.code[ha] == view.code[hb];
        return enumerate(ha, [&]() {
            return enumerate(hb, [&]() {
                return !iso || colored_code(ha) != colored_code(hb);
            });
        });
    }
};

}  // namespace

std::uint64_t count_distinguishing_colorings(const Graph& tree, int r) {
    if (r < 1) fail(errc::invalid_argument, "count_distinguishing_colorings: r must be >= 1");
    auto meta = tree_meta(tree);
    if (!meta.is_tree)
        fail(errc::invalid_argument, "count_distinguishing_colorings: input is not a tree");
    auto view = detail::build_rooted_view(tree);
    u128 count = tree_count(view, r);
    if (count > kU64Max)
        fail(errc::limit_exceeded, "count_distinguishing_colorings: count exceeds 64 bits");
    return static_cast<std::uint64_t>(count);
}

bool is_distinguishing_coloring(const Graph& tree, const std::vector<int>& colors) {
    auto view = detail::build_rooted_view(tree);
    if (static_cast<int>(colors.size()) != view.n) return false;

    std::vector<std::string> code(view.parent.size());
    // bottom-up colored codes; duplicate within a sibling class => swap exists
    std::function<bool(int)> check = [&](int v) -> bool {
        std::vector<std::string> child_codes;
        for (int c : view.children[v]) {
            if (!check(c)) return false;
            child_codes.push_back(code[c]);
        }
        std::sort(child_codes.begin(), child_codes.end());
        for (std::size_t i = 0; i + 1 < child_codes.size(); ++i)
            if (child_codes[i] == child_codes[i + 1]) return false;
        std::string own = "(" + std::to_string(v < view.n ? colors[v] : 0) + ":";
        for (const auto& cc : child_codes) own += cc;
        own += ")";
        code[v] = std::move(own);
        return true;
    };

    if (!view.virtual_root) return check(view.root);
    int ha = view.children[view.root][0];
    int hb = view.children[view.root][1];
    if (!check(ha) || !check(hb)) return false;
    if (view.code[ha] == view.code[hb] && code[ha] == code[hb]) return false;
    return true;
}

namespace {

DistinguishingResult brute_force_distinguishing(const Graph& g, const AutomorphismOptions& opts) {
    auto group = automorphisms(g, opts);
    int n = g.order();
    DistinguishingResult result;
    if (group.order == 1) {
        result.d = 1;
        result.witness.assign(n, 1);
        return result;
    }
    for (int r = 2; r <= n; ++r) {
        double space = 1;
        for (int i = 0; i < n; ++i) space *= r;
        if (space > 3e7)
            fail(errc::limit_exceeded, "distinguishing_number: coloring space too large");
        std::vector<int> colors(n, 1);
        while (true) {
            bool fixed_by_nontrivial = false;
            for (const auto& p : group.perms) {
                bool identity = true, preserved = true;
                for (int v = 0; v < n; ++v) {
                    if (p[v] != v) identity = false;
                    if (colors[p[v]] != colors[v]) {
                        preserved = false;
                        break;
                    }
                }
                if (!identity && preserved) {
                    fixed_by_nontrivial = true;
                    break;
                }
            }
            if (!fixed_by_nontrivial) {
                result.d = r;
                result.witness = colors;
                return result;
            }
            int i = n - 1;
            while (i >= 0 && colors[i] == r) colors[i--] = 1;
            if (i < 0) break;
            ++colors[i];
        }
    }
    fail(errc::limit_exceeded, "distinguishing_number: no coloring found");  // unreachable
}

}  // namespace

DistinguishingResult distinguishing_number(const Graph& g, const AutomorphismOptions& opts) {
    if (!is_connected(g)) fail(errc::invalid_argument, "distinguishing_number: graph must be connected");
    bool tree = g.size() == g.order() - 1;
    if (!tree) return brute_force_distinguishing(g, opts);

    auto view = detail::build_rooted_view(g);
    for (int r = 1; r <= g.order(); ++r) {
        if (tree_count(view, r) == 0) continue;
        WitnessBuilder builder{g, view, r, {}};
        if (!builder.build())
            fail(errc::limit_exceeded, "distinguishing_number: witness construction failed");
        return {r, builder.colors};
    }
    fail(errc::limit_exceeded, "distinguishing_number: no coloring found");  // unreachable
}

}  // namespace rpebble
