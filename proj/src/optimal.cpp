#include "rpebble/optimal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rpebble/domination.hpp"
#include "rpebble/error.hpp"
#include "rpebble/solver.hpp"

namespace rpebble {

namespace {

struct SweepContext {
    const Graph& g;
    int n;
    bool tree;
    bool path_order;                           // edges are exactly {i, i+1}
    std::vector<std::vector<int>> dist;        // all pairs
    std::vector<std::vector<double>> inv_pow;  // inv_pow[u][t] = 2^-dist(u,t)
    std::vector<std::vector<double>> suffix;   // suffix[k][t] = max_{u>=k} 2^-dist(u,t)
    SearchOptions opts;
    mutable std::atomic<std::uint64_t> examined_total{0};

    explicit SweepContext(const Graph& graph, const SearchOptions& options)
        : g(graph), n(graph.order()), opts(options) {
        if (!is_connected(graph))
            fail(errc::invalid_argument, "optimal search: graph must be connected");
        tree = graph.size() == n - 1;
        path_order = true;
        for (int i = 0; i < n && path_order; ++i)
            path_order = graph.degree(i) == (i == 0 || i == n - 1 ? (n == 1 ? 0 : 1) : 2) &&
                         (i == n - 1 || graph.adjacent(i, i + 1));
        dist = all_pairs_distances(graph);
        int diameter = 0;
        for (const auto& row : dist)
            diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
        if (diameter > 50)
            fail(errc::unsupported, "optimal search: diameter beyond the supported range");
        inv_pow.assign(n, std::vector<double>(n));
        for (int u = 0; u < n; ++u)
            for (int t = 0; t < n; ++t) inv_pow[u][t] = std::ldexp(1.0, -dist[u][t]);
        suffix.assign(n + 1, std::vector<double>(n, 0.0));
        for (int k = n - 1; k >= 0; --k)
            for (int t = 0; t < n; ++t) suffix[k][t] = std::max(suffix[k + 1][t], inv_pow[k][t]);
    }
};

struct LevelResult {
    std::uint64_t enumerated = 0;
    std::uint64_t solvable = 0;
    std::vector<Config> witnesses;
    bool truncated = false;
};

// Enumerates completions of one weight-level prefix and checks each
// configuration exactly. Pruning drops a subtree only when some target's
// pebbling potential sum f(u)*2^-dist(u,t) cannot reach 1, which no move
// sequence can overcome, so value and count are unaffected.
class LevelWorker {
public:
    LevelWorker(const SweepContext& ctx, long long w, int cap, bool ascending, bool collect)
        : ctx_(ctx), w_(w), cap_(cap), ascending_(ascending), collect_(collect) {
        f_.assign(ctx_.n, 0);
        pot_.assign(ctx_.n, 0.0);
        left_fold_.assign(ctx_.n, 0);
        targets_.resize(ctx_.n);
        for (int i = 0; i < ctx_.n; ++i) targets_[i] = i;
        if (ctx_.tree) solver_.emplace(ctx_.g);
    }

    // Runs the subtree below `prefix` (counts of vertices 0..p-1).
    LevelResult run(const std::vector<int>& prefix) {
        std::fill(pot_.begin(), pot_.end(), 0.0);
        long long rem = w_;
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            f_[k] = prefix[k];
            rem -= prefix[k];
            left_fold_[k] = prefix[k] + (k ? left_fold_[k - 1] / 2 : 0);
            for (int t = 0; t < ctx_.n; ++t) pot_[t] += prefix[k] * ctx_.inv_pow[k][t];
        }
        result_ = LevelResult{};
        dfs(static_cast<int>(prefix.size()), rem);
        return std::move(result_);
    }

private:
    void dfs(int k, long long rem) {
        if (k == ctx_.n) {
            check_complete();
            return;
        }
        int cmax = static_cast<int>(std::min<long long>(cap_, rem));
        int cmin = static_cast<int>(std::max<long long>(0, rem - static_cast<long long>(cap_) * (ctx_.n - 1 - k)));
        int from = ascending_ ? cmin : cmax;
        int step = ascending_ ? 1 : -1;
        for (int c = from; c >= cmin && c <= cmax; c += step) {
            f_[k] = c;
            left_fold_[k] = c + (k ? left_fold_[k - 1] / 2 : 0);
            if (c != 0)
                for (int t = 0; t < ctx_.n; ++t) pot_[t] += c * ctx_.inv_pow[k][t];
            bool viable = true;
            if (ctx_.opts.prune) {
                double r2 = static_cast<double>(rem - c);
                for (int t = 0; t < ctx_.n; ++t) {
                    if (pot_[t] + r2 * ctx_.suffix[k + 1][t] < 1.0) {
                        viable = false;
                        break;
                    }
                }
                if (viable && ctx_.path_order) viable = path_frontier_viable(k, rem - c);
            }
            if (viable) dfs(k + 1, rem - c);
            if (c != 0)
                for (int t = 0; t < ctx_.n; ++t) pot_[t] -= c * ctx_.inv_pow[k][t];
        }
        f_[k] = 0;
    }

    // Floor-aware bound for path-ordered graphs. Concentrating the remaining
    // mass on the frontier vertex never decreases what the suffix can push
    // left (advancing a pebble toward a fixed target never lowers the fold),
    // so the exact right fold seeded with `rem` is an upper bound for every
    // completion. A placed target j is then coverable only if its left fold
    // already reaches it or the optimistic right fold delivers a pebble.
    bool path_frontier_viable(int k, long long rem) const {
        long long right = rem;  // optimistic fold value just right of position j
        for (int j = k; j >= 0; --j) {
            if (left_fold_[j] < 1 && right < 2) return false;
            right = f_[j] + right / 2;
        }
        if (rem == 0 && k < ctx_.n - 1) {
            // nothing left to place; the prefix alone must reach the far end
            int d = ctx_.n - 1 - k;
            if (d >= 63 || left_fold_[k] < (1LL << d)) return false;
        }
        return true;
    }

    void check_complete() {
        ++result_.enumerated;
        if (ctx_.examined_total.fetch_add(1, std::memory_order_relaxed) >=
            ctx_.opts.enumeration_budget)
            fail(errc::budget_exceeded, "optimal search: enumeration budget exhausted");
        if (!solvable()) return;
        ++result_.solvable;
        if (!collect_) return;
        if (result_.witnesses.size() < ctx_.opts.witness_limit)
            result_.witnesses.push_back(f_);
        else
            result_.truncated = true;
    }

    bool solvable() {
        for (std::size_t i = 0; i < targets_.size(); ++i) {
            int t = targets_[i];
            bool ok;
            if (solver_)
                ok = solver_->max_to_counts(f_, t) >= 1;
            else
                ok = reachable_to(ctx_.g, f_, t, SearchLimits{ctx_.opts.node_budget}).reachable;
            if (!ok) {
                // failing targets tend to repeat; try this one first next time
                std::rotate(targets_.begin(), targets_.begin() + i, targets_.begin() + i + 1);
                return false;
            }
        }
        return true;
    }

    const SweepContext& ctx_;
    long long w_;
    int cap_;
    bool ascending_;
    bool collect_;
    Config f_;
    std::vector<double> pot_;
    std::vector<int> targets_;
    std::optional<TreeDeliver> solver_;
    LevelResult result_;
};

// Expands the enumeration tree to a fixed depth; pruned prefixes are dropped
// exactly as the sequential walk would drop them.
std::vector<std::vector<int>> expand_prefixes(const SweepContext& ctx, long long w, int cap,
                                              bool ascending, int depth) {
    std::vector<std::vector<int>> tasks = {{}};
    for (int k = 0; k < depth; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : tasks) {
            long long rem = w;
            std::vector<double> pot(ctx.n, 0.0);
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                rem -= prefix[i];
                for (int t = 0; t < ctx.n; ++t) pot[t] += prefix[i] * ctx.inv_pow[i][t];
            }
            int cmax = static_cast<int>(std::min<long long>(cap, rem));
            int cmin = static_cast<int>(
                std::max<long long>(0, rem - static_cast<long long>(cap) * (ctx.n - 1 - k)));
            int from = ascending ? cmin : cmax;
            int step = ascending ? 1 : -1;
            for (int c = from; c >= cmin && c <= cmax; c += step) {
                bool viable = true;
                if (ctx.opts.prune) {
                    double r2 = static_cast<double>(rem - c);
                    for (int t = 0; t < ctx.n; ++t) {
                        double p = pot[t] + c * ctx.inv_pow[k][t];
                        if (p + r2 * ctx.suffix[k + 1][t] < 1.0) {
                            viable = false;
                            break;
                        }
                    }
                }
                if (!viable) continue;
                auto task = prefix;
                task.push_back(c);
                next.push_back(std::move(task));
            }
        }
        tasks = std::move(next);
        if (tasks.size() >= 4096) break;
    }
    return tasks;
}

LevelResult sweep_level(SweepContext& ctx, long long w, int cap, bool ascending, bool collect) {
    int threads = std::max(1, ctx.opts.threads);
    if (threads == 1 || ctx.n <= 2) {
        LevelWorker worker(ctx, w, cap, ascending, collect);
        return worker.run({});
    }

    int depth = 1;
    std::vector<std::vector<int>> tasks;
    while (true) {
        tasks = expand_prefixes(ctx, w, cap, ascending, depth);
        if (static_cast<int>(tasks.size()) >= threads * 8 || depth >= ctx.n - 1 ||
            tasks.size() >= 4096)
            break;
        ++depth;
    }
    if (tasks.empty()) return {};

    std::vector<LevelResult> partial(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
        pool.emplace_back([&, i]() {
            try {
                LevelWorker worker(ctx, w, cap, ascending, collect);
                while (true) {
                    std::size_t idx = cursor.fetch_add(1);
                    if (idx >= tasks.size()) break;
                    partial[idx] = worker.run(tasks[idx]);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    // merge in task order: task list is in enumeration order, so witness
    // truncation keeps the same configurations as a sequential run
    LevelResult merged;
    for (auto& part : partial) {
        merged.enumerated += part.enumerated;
        merged.solvable += part.solvable;
        merged.truncated = merged.truncated || part.truncated;
        for (auto& wit : part.witnesses) {
            if (merged.witnesses.size() < ctx.opts.witness_limit)
                merged.witnesses.push_back(std::move(wit));
            else
                merged.truncated = true;
        }
    }
    return merged;
}

OptimalResult run_sweep(const Graph& g, std::optional<int> t, const SearchOptions& opts) {
    if (t && *t < 1) fail(errc::invalid_argument, "optimal search: cap must be >= 1");
    SweepContext ctx(g, opts);
    OptimalResult result;
    result.t = t;

    long long max_weight = static_cast<long long>(ctx.n) * (t ? *t : 2);
    for (long long w = lower_bound(g, t.value_or(0));; ++w) {
        if (w > max_weight)
            fail(errc::unsupported, "optimal search: no solvable configuration found");
        int cap = t ? std::min<long long>(*t, w) : static_cast<int>(w);
        LevelResult level = sweep_level(ctx, w, cap, /*ascending=*/false, /*collect=*/true);
        result.levels.push_back({static_cast<int>(w), level.enumerated, level.solvable});
        result.examined += level.enumerated;
        if (level.solvable > 0) {
            result.value = static_cast<int>(w);
            result.count = level.solvable;
            result.witnesses = std::move(level.witnesses);
            result.truncated = level.truncated;
            std::sort(result.witnesses.begin(), result.witnesses.end());
            return result;
        }
    }
}

}  // namespace

OptimalResult restricted_optimal_number(const Graph& g, int t, const SearchOptions& opts) {
    return run_sweep(g, t, opts);
}

OptimalResult optimal_number(const Graph& g, const SearchOptions& opts) {
    return run_sweep(g, std::nullopt, opts);
}

std::uint64_t detail::recount_level(const Graph& g, long long w, int cap,
                                    const SearchOptions& opts) {
    SweepContext ctx(g, opts);
    return sweep_level(ctx, w, cap, /*ascending=*/true, /*collect=*/false).solvable;
}

WeightConfigStream::WeightConfigStream(int n, long long w, int t) : n_(n), t_(t) {
    if (n < 1) fail(errc::invalid_argument, "weight enumeration: n must be >= 1");
    if (w < 0 || t < 0) fail(errc::invalid_argument, "weight enumeration: negative weight or cap");
    done_ = w > static_cast<long long>(t) * n;
    cur_.assign(n, 0);
    long long rem = w;
    for (int i = 0; i < n && rem > 0; ++i) {
        cur_[i] = static_cast<int>(std::min<long long>(t, rem));
        rem -= cur_[i];
    }
}

bool WeightConfigStream::next(Config& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = cur_;
        return true;
    }
    long long right = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        if (i < n_ - 1) right += cur_[i + 1];
        if (cur_[i] > 0 && right + 1 <= static_cast<long long>(t_) * (n_ - 1 - i)) {
            cur_[i] -= 1;
            long long rem = right + 1;
            for (int j = i + 1; j < n_; ++j) {
                cur_[j] = static_cast<int>(std::min<long long>(t_, rem));
                rem -= cur_[j];
            }
            out = cur_;
            return true;
        }
    }
    done_ = true;
    return false;
}

int lower_bound(const Graph& g, int) {
    return g.order() == 1 ? 1 : 2;
}

BoundsReport upper_bound_report(const Graph& g) {
    BoundsReport report;
    auto [gamma, dom_set] = domination_number(g);
    auto [roman, roman_fn] = roman_domination_number(g);
    report.gamma = gamma;
    report.gamma_roman = roman;
    report.two_gamma = 2 * gamma;
    bool isolated = false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) isolated = true;
    if (!isolated) report.gamma_total = total_domination_number(g);
    auto meta = tree_meta(g);
    if (meta.is_tree) {
        int n = g.order();
        if (n >= 3) report.tree_n_minus_l_plus_1 = n - meta.leaf_count + 1;
        if (n >= 2) report.five_n_over_7 = (5 * n + 6) / 7;
    }
    return report;
}

MultiplicityProperties multiplicity_properties(const OptimalResult& result) {
    if (result.truncated)
        fail(errc::invalid_argument, "multiplicity_properties: witness list was truncated");
    MultiplicityProperties props;
    props.value = result.value;
    props.count = result.count;
    props.odd_value = result.value % 2 == 1;
    for (const auto& wit : result.witnesses)
        for (int c : wit)
            if (c == 1) props.has_witness_with_a_one = true;
    return props;
}

MultiplicityProperties multiplicity_properties(const Graph& g, const SearchOptions& opts) {
    return multiplicity_properties(restricted_optimal_number(g, 2, opts));
}

}  // namespace rpebble
