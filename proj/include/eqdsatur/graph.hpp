#ifndef EQDSATUR_GRAPH_HPP
#define EQDSATUR_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eqdsatur/bitset.hpp"

namespace eqdsatur {

using VertexSet = Bitset;

// Simple undirected graph. Immutable after construction; adjacency is kept
// both as bit rows (O(1) adjacency tests, set intersections) and as sorted
// neighbor lists (cheap iteration).
class Graph {
public:
    // Edges with out-of-range endpoints or self-loops are rejected;
    // duplicates and reversed duplicates collapse to a single edge.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int degree(int v) const { return int(adj_list_[v].size()); }
    int max_degree() const { return max_degree_; }

    bool adjacent(int u, int v) const { return adj_bits_[u].test(v); }
    const std::vector<int>& neighbors(int v) const { return adj_list_[v]; }
    const Bitset& neighbor_set(int v) const { return adj_bits_[v]; }

private:
    int n_;
    int m_ = 0;
    int max_degree_ = 0;
    std::vector<Bitset> adj_bits_;
    std::vector<std::vector<int>> adj_list_;
};

// DIMACS .col format: `c` comment lines, one `p edge <n> <m>` problem line,
// `e <u> <v>` edge lines with 1-based endpoints. The declared edge count is
// not trusted; duplicate/reversed edge lines collapse silently.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);

void write_dimacs(const Graph& g, std::ostream& out);

// G(n, density) with a deterministic stream: pairs {u,v}, u < v, are visited
// in lexicographic order and each becomes an edge with the given probability.
// Same (n, density, seed) always produces the identical graph.
Graph random_graph(int n, double density, uint64_t seed);

bool is_clique(const Graph& g, const VertexSet& q);

// Greedy maximal clique: seed with a maximum-degree vertex, repeatedly add
// the highest-degree vertex adjacent to all current members; ties broken by
// lowest index.
VertexSet greedy_maximal_clique(const Graph& g);

}  // namespace eqdsatur

#endif
