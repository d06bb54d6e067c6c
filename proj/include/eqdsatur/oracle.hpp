#ifndef EQDSATUR_ORACLE_HPP
#define EQDSATUR_ORACLE_HPP

#include "eqdsatur/coloring.hpp"
#include "eqdsatur/graph.hpp"

namespace eqdsatur {

struct OracleResult {
    int chi_eq = 0;
    EquitableColoring witness;
};

// Ground-truth equitable chromatic number by exhaustive enumeration, for
// test-sized graphs only. For k = 1..n, searches all color assignments with
// canonical symmetry breaking (vertex 0 takes color 1, new colors appear in
// ascending order) and per-class size caps; returns the first feasible k.
// Throws when n exceeds max_n.
OracleResult brute_force_chi_eq(const Graph& g, int max_n = 12);

}  // namespace eqdsatur

#endif
