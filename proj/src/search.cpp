#include "eqdsatur/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "eqdsatur/bounds.hpp"

namespace eqdsatur {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Brelaz: return "brelaz";
        case Strategy::Sewell: return "sewell";
        case Strategy::Pass: return "pass";
    }
    return "?";
}

std::string to_string(ColorOrder o) {
    return o == ColorOrder::Index ? "index" : "size";
}

std::string to_string(Pruning p) {
    return p == Pruning::Equity ? "equity" : "trivial";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "OPTIMAL";
        case Status::TimeLimit: return "TIME_LIMIT";
        case Status::NodeLimit: return "NODE_LIMIT";
    }
    return "?";
}

int select_vertex(const PartialColoring& pi, Strategy strategy) {
    if (pi.uncolored_count() == 0)
        throw std::invalid_argument("select_vertex: no uncolored vertex");
    const int k = pi.k();

    // max-saturation candidate set S
    int max_sat = -1;
    std::vector<int> sat_set;
    pi.uncolored().for_each([&](int u) {
        const int sat = k - pi.feasible(u).count_below(k);
        if (sat > max_sat) {
            max_sat = sat;
            sat_set.clear();
        }
        if (sat == max_sat) sat_set.push_back(u);
    });
    if (sat_set.size() == 1 || strategy == Strategy::Brelaz) {
        int best = sat_set.front(), best_deg = -1;
        if (sat_set.size() > 1) {
            for (int u : sat_set) {
                const int deg = Bitset::and_count_below(
                    pi.graph().neighbor_set(u), pi.uncolored(), pi.n());
                if (deg > best_deg) {
                    best = u;
                    best_deg = deg;
                }
            }
        }
        return best;
    }

    Bitset sat_mask(pi.n());
    if (strategy == Strategy::Pass)
        for (int u : sat_set) sat_mask.set(u);

    int best = -1;
    long best_score = -1;
    int best_deg = -1;
    for (int u : sat_set) {
        long score = 0;
        for (int v : pi.graph().neighbors(u)) {
            if (!pi.uncolored().test(v)) continue;
            if (strategy == Strategy::Pass && !sat_mask.test(v)) continue;
            score += Bitset::and_count_below(pi.feasible(u), pi.feasible(v), k);
        }
        const int deg = Bitset::and_count_below(
            pi.graph().neighbor_set(u), pi.uncolored(), pi.n());
        if (score > best_score || (score == best_score && deg > best_deg)) {
            best = u;
            best_score = score;
            best_deg = deg;
        }
    }
    return best;
}

std::vector<int> order_colors(const PartialColoring& pi, int u, int ub,
    ColorOrder order) {
    assert(pi.color_of(u) == 0);
    const int cap = std::min(pi.k() + 1, ub - 1);
    std::vector<int> colors;
    for (int j = 1; j <= cap; ++j)
        if (pi.color_feasible(u, j)) colors.push_back(j);
    if (order == ColorOrder::SizeAsc)
        std::stable_sort(colors.begin(), colors.end(), [&](int a, int b) {
            const bool fresh_a = a > pi.k(), fresh_b = b > pi.k();
            if (fresh_a != fresh_b) return fresh_b;  // new class goes last
            return pi.class_size(a) < pi.class_size(b);
        });
    return colors;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchContext {
    const SolverConfig& cfg;
    PartialColoring pi;
    const int lb;
    int ub;
    EquitableColoring incumbent;
    uint64_t nodes = 0;
    Status status = Status::Optimal;
    bool stop = false;
    Clock::time_point start = {};

    bool limits_hit() {
        if (cfg.node_limit && nodes >= *cfg.node_limit) {
            status = Status::NodeLimit;
            return true;
        }
        const double elapsed =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed > cfg.time_limit) {
            status = Status::TimeLimit;
            return true;
        }
        return false;
    }

    void record_leaf() {
        // k < ub on entry to every node, so this always improves
        if (cfg.pruning == Pruning::Trivial
            && !validate_equitable(pi.graph(), pi.to_coloring()))
            return;
        ub = pi.k();
        incumbent = pi.to_coloring();
        if (cfg.incumbent_callback) cfg.incumbent_callback(incumbent);
        if (ub == lb) stop = true;
    }

    void node() {
        if (limits_hit()) {
            stop = true;
            return;
        }
        ++nodes;
        if (pi.uncolored_count() == 0) {
            record_leaf();
            return;
        }
        const int u = select_vertex(pi, cfg.strategy);
        for (int j : order_colors(pi, u, ub, cfg.color_order)) {
            if (j >= ub) continue;  // ub may have dropped mid-loop
            const auto undo = pi.apply(u, j);
            // forward check against the usable color window: a vertex with
            // no feasible color below the current UB kills the subtree
            bool viable = true;
            for (int v : pi.graph().neighbors(u))
                if (pi.uncolored().test(v)
                    && pi.feasible(v).count_below(ub - 1) == 0) {
                    viable = false;
                    break;
                }
            if (viable && cfg.pruning == Pruning::Equity)
                viable = check_p1(pi, ub) && check_p2(pi, lb);
            if (viable) node();
            pi.rollback(undo);
            if (stop) return;
            if (ub <= pi.k()) return;  // no descendant can improve further
        }
    }
};

}  // namespace

SolveResult solve(const Graph& g, const SolverConfig& config) {
    const auto start = Clock::now();
    const VertexSet clique = greedy_maximal_clique(g);
    const int lb = std::max(lower_bound(g), clique.count());
    EquitableColoring incumbent = naive_heuristic(g, lb);

    SolveResult result;
    result.lb_initial = lb;
    result.ub_initial = incumbent.k;
    if (config.incumbent_callback) config.incumbent_callback(incumbent);

    if (incumbent.k == lb) {
        result.status = Status::Optimal;
        result.chi_eq = lb;
        result.lb_final = result.ub_final = lb;
        result.incumbent = std::move(incumbent);
        result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }

    SearchContext ctx{config, initial_partial(g, clique), lb, incumbent.k,
        std::move(incumbent)};
    ctx.start = start;
    ctx.node();

    result.nodes = ctx.nodes;
    result.incumbent = std::move(ctx.incumbent);
    result.ub_final = ctx.ub;
    if (ctx.status == Status::Optimal) {
        // exhausted (or ub reached lb): ub is proven optimal
        result.status = Status::Optimal;
        result.chi_eq = ctx.ub;
        result.lb_final = ctx.ub;
    } else {
        result.status = ctx.status;
        result.lb_final = lb;
    }
    result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

}  // namespace eqdsatur
