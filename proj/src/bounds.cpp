#include "eqdsatur/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqdsatur {

namespace {

// One greedy attempt at an equitable k-coloring; empty assignment on failure.
std::vector<int> try_equitable_greedy(const Graph& g, int k,
    const std::vector<int>& order) {
    const int n = g.num_vertices();
    const int floor_size = n / k;
    const int surplus = n % k;  // classes allowed to reach floor_size + 1
    std::vector<int> assigned(n, 0);
    std::vector<int> size(k + 1, 0);
    int above_floor = 0;
    for (int v : order) {
        int best = 0;
        for (int j = 1; j <= k; ++j) {
            bool blocked = false;
            for (int w : g.neighbors(v))
                if (assigned[w] == j) { blocked = true; break; }
            if (blocked) continue;
            if (size[j] >= floor_size && !(size[j] == floor_size && above_floor < surplus))
                continue;
            if (best == 0 || size[j] < size[best]) best = j;
        }
        if (best == 0) return {};
        if (size[best] == floor_size) ++above_floor;
        ++size[best];
        assigned[v] = best;
    }
    return assigned;
}

}  // namespace

EquitableColoring naive_heuristic(const Graph& g, int start_k) {
    const int n = g.num_vertices();
    if (start_k < 1 || start_k > n)
        throw std::invalid_argument("naive_heuristic: start_k outside 1..n");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
        [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = start_k; k <= n; ++k) {
        auto assigned = try_equitable_greedy(g, k, order);
        if (!assigned.empty()) return EquitableColoring{k, std::move(assigned)};
    }
    // unreachable: k = n always succeeds with singleton classes
    throw std::logic_error("naive_heuristic: greedy failed at k = n");
}

int lower_bound(const Graph& g) {
    const int n = g.num_vertices();
    const int clique = greedy_maximal_clique(g).count();
    int k_deg = 1;
    while (n / k_deg > n - g.max_degree()) ++k_deg;
    return std::max(clique, k_deg);
}

Bounds initial_bounds(const Graph& g) {
    Bounds b;
    b.lb = lower_bound(g);
    b.incumbent = naive_heuristic(g, b.lb);
    b.ub = b.incumbent.k;
    return b;
}

}  // namespace eqdsatur
