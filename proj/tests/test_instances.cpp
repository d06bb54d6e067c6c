#include <doctest.h>

#include <string>

#include "eqdsatur/graph.hpp"
#include "eqdsatur/oracle.hpp"
#include "eqdsatur/search.hpp"

using namespace eqdsatur;

namespace {

Graph fixture(const std::string& name) {
    return parse_dimacs_file(std::string(TEST_INSTANCE_DIR) + "/" + name);
}

bool triangle_free(const Graph& g) {
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            for (int w : g.neighbors(v))
                if (w != u && g.adjacent(w, u)) return false;
    return true;
}

}  // namespace

TEST_SUITE("instances") {

TEST_CASE("queen fixture has the published shape") {
    Graph g = fixture("queen8_8.col");
    CHECK(g.num_vertices() == 64);
    CHECK(g.num_edges() == 728);
    // every square attacks at least a full row+column and at most adds both
    // diagonals of length 7
    for (int v = 0; v < 64; ++v) {
        CHECK(g.degree(v) >= 21);
        CHECK(g.degree(v) <= 27);
    }
}

TEST_CASE("mycielski fixtures have the published shapes and stay triangle-free") {
    struct Shape { const char* name; int n; int m; };
    for (const auto& [name, n, m] : {Shape{"myciel3.col", 11, 20},
             Shape{"myciel4.col", 23, 71}, Shape{"myciel5.col", 47, 236}}) {
        Graph g = fixture(name);
        CHECK(g.num_vertices() == n);
        CHECK(g.num_edges() == m);
        CHECK(triangle_free(g));
    }
}

TEST_CASE("myciel3 is small enough for the oracle to cross-check") {
    Graph g = fixture("myciel3.col");
    OracleResult oracle = brute_force_chi_eq(g);
    CHECK(oracle.chi_eq == 4);
    SolveResult res = solve(g);
    CHECK(res.status == Status::Optimal);
    CHECK(res.chi_eq == 4);
}

}  // TEST_SUITE
