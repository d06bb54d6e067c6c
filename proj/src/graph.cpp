#include "eqdsatur/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eqdsatur {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_bits_.assign(n, Bitset(n));
    adj_list_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop edge");
        if (adj_bits_[u].test(v)) continue;
        adj_bits_[u].set(v);
        adj_bits_[v].set(u);
        ++m_;
    }
    for (int v = 0; v < n; ++v) {
        adj_list_[v] = adj_bits_[v].to_vector();
        max_degree_ = std::max(max_degree_, int(adj_list_[v].size()));
    }
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw std::runtime_error("dimacs parse error at line "
        + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) parse_fail(line_no, "duplicate problem line");
            std::string fmt;
            long declared_m = 0;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 1)
                parse_fail(line_no, "malformed problem line (want `p edge <n> <m>`)");
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge line before problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) parse_fail(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(line_no, "vertex index outside [1, n]");
            if (u == v) parse_fail(line_no, "self-loop edge");
            edges.emplace_back(u - 1, v - 1);
        } else {
            parse_fail(line_no, "unknown line type `" + tag + "`");
        }
    }
    if (n < 0) throw std::runtime_error("dimacs parse error: missing problem line");
    return Graph(n, edges);
}

Graph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph random_graph(int n, double density, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: n must be positive");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("random_graph: density outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // 53-bit draw in [0,1); engine output alone keeps the stream
            // identical across platforms
            double r = double(rng() >> 11) * 0x1.0p-53;
            if (r < density) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

bool is_clique(const Graph& g, const VertexSet& q) {
    auto members = q.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j])) return false;
    return true;
}

VertexSet greedy_maximal_clique(const Graph& g) {
    const int n = g.num_vertices();
    int seed_vertex = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(seed_vertex)) seed_vertex = v;

    VertexSet clique(n);
    clique.set(seed_vertex);
    Bitset candidates = g.neighbor_set(seed_vertex);
    while (candidates.any()) {
        int best = -1;
        candidates.for_each([&](int v) {
            if (best < 0 || g.degree(v) > g.degree(best)) best = v;
        });
        clique.set(best);
        // keep only candidates adjacent to every clique member
        Bitset next(n);
        candidates.for_each([&](int v) {
            if (v != best && g.adjacent(v, best)) next.set(v);
        });
        candidates = next;
    }
    return clique;
}

}  // namespace eqdsatur
