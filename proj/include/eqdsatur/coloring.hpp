#ifndef EQDSATUR_COLORING_HPP
#define EQDSATUR_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "eqdsatur/graph.hpp"

namespace eqdsatur {

// A complete coloring with colors 1..k per vertex.
struct EquitableColoring {
    int k = 0;
    std::vector<int> assigned;
};

// True iff the coloring is proper, every class 1..k is nonempty, and all
// class sizes lie in [floor(n/k), ceil(n/k)]. Throws if the assignment does
// not cover all vertices or uses a color outside 1..k.
bool validate_equitable(const Graph& g, const EquitableColoring& c);

// Output format: header `s <k>`, then one `<vertex_1based> <color_1based>`
// line per vertex.
void write_coloring(const EquitableColoring& c, std::ostream& out);

// Partial coloring state (k, C_1..C_n, U, F): class assignment with
// 0 = uncolored, per-class sizes, the uncolored set U, and per-vertex
// feasible color sets F(v) = { j : no neighbor of v is colored j }.
//
// Mutation is destructive with an undo log: apply() places one vertex and
// rollback() exactly reverses it (LIFO). Feasibility bookkeeping is kept for
// every vertex via per-color neighbor counts, so F(v) is correct again the
// moment a rollback returns v to U. Single-owner state: one search thread
// at a time.
class PartialColoring {
public:
    // Keeps a pointer into the graph: the graph must outlive the state.
    explicit PartialColoring(const Graph& g);
    explicit PartialColoring(Graph&&) = delete;

    const Graph& graph() const { return *g_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int color_of(int v) const { return assigned_[v]; }
    const Bitset& uncolored() const { return uncolored_; }
    int uncolored_count() const { return uncolored_count_; }
    int class_size(int j) const { return class_size_[j]; }
    int max_class_size() const { return max_class_size_; }  // M

    // F(v) as a bitmask over colors 1..n (bit j-1 = color j).
    const Bitset& feasible(int v) const { return feasible_[v]; }
    bool color_feasible(int v, int j) const { return feasible_[v].test(j - 1); }

    struct Undo {
        int vertex;
        int color;
        int prev_k;
        int prev_max_class_size;
    };

    // Place u into class j. Asserts u uncolored, j feasible, j <= k+1.
    Undo apply(int u, int j);
    void rollback(const Undo& undo);

    // Snapshot of the colored part; meaningful once U is empty.
    EquitableColoring to_coloring() const;

    // Recomputes F from adjacency and compares (test support).
    bool feasibility_consistent() const;

private:
    const Graph* g_;
    int n_;
    int k_ = 0;
    int uncolored_count_;
    int max_class_size_ = 0;
    std::vector<int> assigned_;        // 0 = uncolored
    std::vector<int> class_size_;      // index 1..n
    Bitset uncolored_;
    std::vector<Bitset> feasible_;
    std::vector<uint16_t> nbr_color_count_;  // [v * n + (j-1)]

    friend PartialColoring initial_partial(const Graph&, const VertexSet&);
};

// Pi_Q: the i-th member of the clique Q (ascending index) seeds class i.
// Throws if Q is empty or not a clique.
PartialColoring initial_partial(const Graph& g, const VertexSet& q);
PartialColoring initial_partial(Graph&&, const VertexSet&) = delete;

// Value-level extension <u,j> of Pi: validates u in U, j in F(u), j <= k+1
// and returns the extended copy.
PartialColoring extend(const PartialColoring& pi, int u, int j);

// Necessary condition for Pi to extend to an r-eqcol with k <= r < UB:
// |U| >= sum_{r=1..k} (max{M-1, floor(n/(UB-1))} - |C_r|)^+.
// Caller must ensure k < UB and UB >= 2.
bool check_p1(const PartialColoring& pi, int ub);

// Necessary condition: M <= ceil(n / max{k, LB}).
bool check_p2(const PartialColoring& pi, int lb);

}  // namespace eqdsatur

#endif
