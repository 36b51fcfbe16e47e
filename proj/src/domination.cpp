#include "rpebble/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "rpebble/error.hpp"

namespace rpebble {

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
    int n;
    Mask all;
    std::vector<Mask> open;    // N(v)
    std::vector<Mask> closed;  // N[v]

    explicit MaskGraph(const Graph& g) : n(g.order()) {
        if (n > 32) fail(errc::budget_exceeded, "domination: exact solver budget is n <= 32");
        all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
        open.assign(n, 0);
        closed.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) open[v] |= Mask{1} << u;
            closed[v] = open[v] | (Mask{1} << v);
        }
    }
};

int popcount(Mask m) { return std::popcount(m); }

// ---- gamma ------------------------------------------------------------

struct DomSolver {
    const MaskGraph& mg;
    int best;
    std::vector<int> best_set;
    std::vector<int> cur;

    explicit DomSolver(const MaskGraph& graph) : mg(graph) {
        // greedy incumbent: max new coverage, lowest index tie-break
        Mask covered = 0;
        std::vector<int> set;
        while (covered != mg.all) {
            int pick = -1, gain = -1;
            for (int v = 0; v < mg.n; ++v) {
                int got = popcount(mg.closed[v] & ~covered);
                if (got > gain) {
                    gain = got;
                    pick = v;
                }
            }
            covered |= mg.closed[pick];
            set.push_back(pick);
        }
        best = static_cast<int>(set.size());
        best_set = set;
    }

    void search(Mask covered) {
        if (covered == mg.all) {
            if (static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        int max_gain = 0;
        for (int v = 0; v < mg.n; ++v)
            max_gain = std::max(max_gain, popcount(mg.closed[v] & ~covered));
        int lb = (popcount(~covered & mg.all) + max_gain - 1) / max_gain;
        if (static_cast<int>(cur.size()) + lb >= best) return;

        int pivot = std::countr_zero(~covered & mg.all);  // first uncovered vertex
        Mask candidates = mg.closed[pivot];
        while (candidates) {
            int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            cur.push_back(u);
            search(covered | mg.closed[u]);
            cur.pop_back();
        }
    }
};

// ---- gamma_R ----------------------------------------------------------

struct RomanSolver {
    const MaskGraph& mg;
    std::vector<int> order;  // degree descending
    int best;
    std::vector<int> best_values;
    std::vector<int> values;  // by original vertex id, -1 unassigned

    explicit RomanSolver(const MaskGraph& graph, int incumbent_weight,
                         const std::vector<int>& incumbent)
        : mg(graph), best(incumbent_weight), best_values(incumbent) {
        order.resize(mg.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return popcount(mg.open[a]) > popcount(mg.open[b]);
        });
        values.assign(mg.n, -1);
    }

    // zeros: assigned 0; twos: assigned 2; unassigned: not yet decided
    void search(int idx, int cost, Mask zeros, Mask twos, Mask unassigned) {
        Mask covered = 0;
        for (int v = 0; v < mg.n; ++v)
            if (twos & (Mask{1} << v)) covered |= mg.closed[v];
        Mask uncovered_zeros = zeros & ~covered;

        // a zero with no possible future 2-neighbor is dead
        Mask fixable = 0;
        for (int v = 0; v < mg.n; ++v)
            if (unassigned & (Mask{1} << v)) fixable |= mg.closed[v];
        if (uncovered_zeros & ~fixable) return;

        if (cost + deficit_bound(uncovered_zeros, unassigned) >= best) return;

        if (idx == mg.n) {
            if (uncovered_zeros == 0 && cost < best) {
                best = cost;
                best_values = values;
            }
            return;
        }

        int v = order[idx];
        Mask bit = Mask{1} << v;
        for (int val : {0, 2, 1}) {
            values[v] = val;
            if (val == 0)
                search(idx + 1, cost, zeros | bit, twos, unassigned & ~bit);
            else if (val == 2)
                search(idx + 1, cost + 2, zeros, twos | bit, unassigned & ~bit);
            else
                search(idx + 1, cost + 1, zeros, twos, unassigned & ~bit);
        }
        values[v] = -1;
    }

    // every uncovered zero needs a future 2; zeros with disjoint potential
    // coverers need distinct 2s
    int deficit_bound(Mask uncovered_zeros, Mask unassigned) const {
        if (!uncovered_zeros) return 0;
        int packing = 0;
        Mask blocked = 0;
        Mask rest = uncovered_zeros;
        while (rest) {
            int z = std::countr_zero(rest);
            rest &= rest - 1;
            if (blocked & (Mask{1} << z)) continue;
            ++packing;
            Mask coverers = mg.closed[z] & unassigned;
            Mask reach = 0;
            while (coverers) {
                int u = std::countr_zero(coverers);
                coverers &= coverers - 1;
                reach |= mg.closed[u];
            }
            blocked |= reach;
        }
        return 2 * packing;
    }
};

// ---- gamma_t ----------------------------------------------------------

struct TotalSolver {
    const MaskGraph& mg;
    int best;
    std::vector<int> best_set;
    std::vector<int> cur;

    explicit TotalSolver(const MaskGraph& graph) : mg(graph) {
        Mask covered = 0;
        std::vector<int> set;
        while (covered != mg.all) {
            int pick = -1, gain = -1;
            for (int v = 0; v < mg.n; ++v) {
                int got = popcount(mg.open[v] & ~covered);
                if (got > gain) {
                    gain = got;
                    pick = v;
                }
            }
            covered |= mg.open[pick];
            set.push_back(pick);
        }
        best = static_cast<int>(set.size());
        best_set = set;
    }

    void search(Mask covered, Mask chosen) {
        if (covered == mg.all) {
            if (static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        int max_gain = 0;
        for (int v = 0; v < mg.n; ++v)
            max_gain = std::max(max_gain, popcount(mg.open[v] & ~covered));
        int lb = (popcount(~covered & mg.all) + max_gain - 1) / max_gain;
        if (static_cast<int>(cur.size()) + lb >= best) return;

        int pivot = std::countr_zero(~covered & mg.all);
        Mask candidates = mg.open[pivot] & ~chosen;
        while (candidates) {
            int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            cur.push_back(u);
            search(covered | mg.open[u], chosen | (Mask{1} << u));
            cur.pop_back();
        }
    }
};

}  // namespace

std::pair<int, DominatingSet> domination_number(const Graph& g) {
    MaskGraph mg(g);
    DomSolver solver(mg);
    solver.search(0);
    std::sort(solver.best_set.begin(), solver.best_set.end());
    return {solver.best, DominatingSet{solver.best_set}};
}

std::pair<int, RomanFunction> roman_domination_number(const Graph& g) {
    MaskGraph mg(g);
    // incumbent: 2s on a greedy dominating set
    auto [gamma, dom] = domination_number(g);
    std::vector<int> incumbent(g.order(), 0);
    for (int v : dom.members) incumbent[v] = 2;
    RomanSolver solver(mg, 2 * gamma, incumbent);
    solver.search(0, 0, 0, 0, mg.all);
    return {solver.best, RomanFunction{solver.best_values}};
}

int total_domination_number(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            fail(errc::invalid_argument, "total domination: isolated vertex " + std::to_string(v));
    MaskGraph mg(g);
    TotalSolver solver(mg);
    solver.search(0, 0);
    return solver.best;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& members) {
    std::vector<bool> covered(g.order(), false);
    for (int v : members) {
        covered[v] = true;
        for (int u : g.neighbors(v)) covered[u] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_roman_function(const Graph& g, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (values[v] < 0 || values[v] > 2) return false;
        if (values[v] == 0) {
            bool covered = false;
            for (int u : g.neighbors(v))
                if (values[u] == 2) covered = true;
            if (!covered) return false;
        }
    }
    return true;
}

bool is_total_dominating_set(const Graph& g, const std::vector<int>& members) {
    std::vector<bool> covered(g.order(), false);
    for (int v : members)
        for (int u : g.neighbors(v)) covered[u] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace rpebble
