#include "rooted_tree.hpp"

#include <algorithm>

namespace rpebble::detail {

namespace {

void build_codes(const Graph& tree, RootedView& view, int v) {
    for (int c : view.children[v]) build_codes(tree, view, c);
    auto& ch = view.children[v];
    std::sort(ch.begin(), ch.end(), [&](int a, int b) {
        if (view.code[a] != view.code[b]) return view.code[a] < view.code[b];
        return a < b;
    });
    std::string code = "(";
    for (int c : ch) code += view.code[c];
    code += ")";
    view.code[v] = std::move(code);
}

}  // namespace

RootedView build_rooted_view(const Graph& tree) {
    auto center = tree_center(tree);  // throws on non-trees
    RootedView view;
    view.n = tree.order();
    int ids = view.n + (center.size() == 2 ? 1 : 0);
    view.parent.assign(ids, -1);
    view.children.assign(ids, {});
    view.code.assign(ids, "");

    if (center.size() == 2) {
        view.root = view.n;
        view.virtual_root = true;
        view.children[view.root] = {center[0], center[1]};
        view.parent[center[0]] = view.root;
        view.parent[center[1]] = view.root;
    } else {
        view.root = center[0];
    }

    // BFS from the center assigning parents (virtual edge already cut)
    std::vector<int> queue;
    if (view.virtual_root) {
        queue = {center[0], center[1]};
    } else {
        queue = {view.root};
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int w : tree.neighbors(u)) {
            if (w == view.parent[u]) continue;
            if (view.virtual_root && ((u == center[0] && w == center[1]) ||
                                      (u == center[1] && w == center[0])))
                continue;
            view.parent[w] = u;
            view.children[u].push_back(w);
            queue.push_back(w);
        }
    }

    if (!view.virtual_root) {
        build_codes(tree, view, view.root);
    } else {
        for (int c : view.children[view.root]) build_codes(tree, view, c);
        auto& ch = view.children[view.root];
        std::sort(ch.begin(), ch.end(), [&](int a, int b) {
            if (view.code[a] != view.code[b]) return view.code[a] < view.code[b];
            return a < b;
        });
        std::string code = "(";
        for (int c : ch) code += view.code[c];
        code += ")";
        view.code[view.root] = std::move(code);
    }

    view.classes.assign(ids, {});
    for (int v = 0; v < ids; ++v) {
        const auto& ch = view.children[v];
        std::size_t i = 0;
        while (i < ch.size()) {
            std::size_t j = i;
            while (j < ch.size() && view.code[ch[j]] == view.code[ch[i]]) ++j;
            view.classes[v].push_back({static_cast<int>(i), static_cast<int>(j)});
            i = j;
        }
    }
    return view;
}

}  // namespace rpebble::detail
