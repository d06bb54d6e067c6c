#ifndef EQDSATUR_BOUNDS_HPP
#define EQDSATUR_BOUNDS_HPP

#include "eqdsatur/coloring.hpp"
#include "eqdsatur/graph.hpp"

namespace eqdsatur {

struct Bounds {
    int lb = 1;
    int ub = 1;
    EquitableColoring incumbent;  // achieves ub
};

// Equity-aware greedy: for k = start_k, start_k+1, ... try to build an
// equitable k-coloring by placing vertices in non-increasing degree order
// into the smallest admissible class; a class is admissible while sizes can
// still end up in [floor(n/k), ceil(n/k)]. Always succeeds by k = n.
EquitableColoring naive_heuristic(const Graph& g, int start_k);

// max of the greedy maximal clique size and the degree bound: the smallest k
// with floor(n/k) <= n - max_degree (the class of a maximum-degree vertex
// has at least floor(n/k) vertices, none of them its neighbors).
int lower_bound(const Graph& g);

Bounds initial_bounds(const Graph& g);

}  // namespace eqdsatur

#endif
