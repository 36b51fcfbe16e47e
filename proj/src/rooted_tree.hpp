#pragma once

// Internal center-rooted decomposition shared by the automorphism and
// distinguishing engines. A two-vertex center is modeled with a virtual
// root (id == n) whose two children are the halves.

#include <string>
#include <vector>

#include "rpebble/canonical.hpp"
#include "rpebble/error.hpp"
#include "rpebble/graph.hpp"

namespace rpebble::detail {

struct RootedView {
    int n = 0;     // real vertex count
    int root = 0;  // == n when the center is an edge
    bool virtual_root = false;
    std::vector<int> parent;                 // -1 for the root
    std::vector<std::vector<int>> children;  // sorted by (code, vertex id)
    std::vector<std::string> code;           // rooted AHU code per vertex

    // children[v] grouped into maximal runs of equal code
    std::vector<std::vector<std::pair<int, int>>> classes;  // per v: [begin, end) runs

    bool halves_isomorphic() const {
        if (!virtual_root) return false;
        const auto& ch = children[root];
        return ch.size() == 2 && code[ch[0]] == code[ch[1]];
    }
};

RootedView build_rooted_view(const Graph& tree);

}  // namespace rpebble::detail
