#include "rpebble/canonical.hpp"

#include <algorithm>

#include "rpebble/error.hpp"

namespace rpebble {

std::string rooted_code(const Graph& tree, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int c : tree.neighbors(v))
        if (c != parent) child_codes.push_back(rooted_code(tree, c, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& cc : child_codes) code += cc;
    code += ")";
    return code;
}

std::vector<int> tree_center(const Graph& tree) {
    auto meta = tree_meta(tree);
    if (!meta.is_tree) fail(errc::invalid_argument, "tree_center: input is not a tree");
    return meta.center;
}

std::string canonical_code(const Graph& tree) {
    auto center = tree_center(tree);
    if (center.size() == 1) return "V" + rooted_code(tree, center[0], -1);
    std::string a = rooted_code(tree, center[0], center[1]);
    std::string b = rooted_code(tree, center[1], center[0]);
    if (b < a) std::swap(a, b);
    return "E" + a + b;
}

}  // namespace rpebble
