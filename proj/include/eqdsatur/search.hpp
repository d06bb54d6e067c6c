#ifndef EQDSATUR_SEARCH_HPP
#define EQDSATUR_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqdsatur/coloring.hpp"
#include "eqdsatur/graph.hpp"

namespace eqdsatur {

enum class Strategy { Brelaz, Sewell, Pass };
enum class ColorOrder { Index, SizeAsc };
enum class Pruning { Equity, Trivial };
enum class Status { Optimal, TimeLimit, NodeLimit };

std::string to_string(Strategy s);
std::string to_string(ColorOrder o);
std::string to_string(Pruning p);
std::string to_string(Status s);

struct SolverConfig {
    Strategy strategy = Strategy::Pass;
    ColorOrder color_order = ColorOrder::SizeAsc;
    Pruning pruning = Pruning::Equity;
    double time_limit = 7200.0;  // seconds
    std::optional<uint64_t> node_limit;
    // Test instrumentation: called whenever an incumbent is recorded.
    std::function<void(const EquitableColoring&)> incumbent_callback;
};

struct SolveResult {
    Status status = Status::Optimal;
    int chi_eq = 0;  // meaningful when status == Optimal
    int lb_final = 0;
    int ub_final = 0;
    int lb_initial = 0;
    int ub_initial = 0;
    EquitableColoring incumbent;
    uint64_t nodes = 0;
    double wall_time = 0.0;
};

// Branching vertex among U: maximum saturation degree
// sat(u) = k - |F(u) cap {1..k}|, then per-strategy tie-breaking
//   Brelaz: largest degree within the uncolored subgraph,
//   Sewell: largest sum of |F(u) cap F(v) cap {1..k}| over uncolored
//           neighbors v,
//   Pass:   the Sewell sum restricted to neighbors in the max-saturation set;
// Sewell/Pass break score ties by the uncolored-subgraph degree, and any
// remaining tie falls to the lowest index. Throws if U is empty.
int select_vertex(const PartialColoring& pi, Strategy strategy);

// Candidate colors j in F(u) with 1 <= j <= min(k+1, ub-1):
// Index ascending j; SizeAsc sorts the existing classes by ascending |C_j|
// with ties by ascending j and leaves the fresh class k+1 last.
std::vector<int> order_colors(const PartialColoring& pi, int u, int ub,
    ColorOrder order);

// Exact equitable chromatic number by DSatur-style branch and bound seeded
// with the greedy clique, the degree/clique lower bound and the greedy
// equitable upper bound. Equity pruning uses check_p1/check_p2 at every
// extension; trivial pruning tests equity only on completed colorings.
SolveResult solve(const Graph& g, const SolverConfig& config = {});

}  // namespace eqdsatur

#endif
