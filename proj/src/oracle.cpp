#include "eqdsatur/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace eqdsatur {

namespace {

struct BruteSearch {
    const Graph& g;
    int k;
    int cap;  // ceil(n/k)
    std::vector<int> assigned;
    std::vector<int> size;

    bool place(int v) {
        const int n = g.num_vertices();
        if (v == n) {
            const int lo = n / k;
            for (int j = 1; j <= k; ++j)
                if (size[j] < lo) return false;
            return true;
        }
        int used = 0;
        for (int w = 0; w < v; ++w) used = std::max(used, assigned[w]);
        const int limit = std::min(used + 1, k);
        for (int j = 1; j <= limit; ++j) {
            if (size[j] == cap) continue;
            bool blocked = false;
            for (int w : g.neighbors(v))
                if (w < v && assigned[w] == j) { blocked = true; break; }
            if (blocked) continue;
            assigned[v] = j;
            ++size[j];
            if (place(v + 1)) return true;
            --size[j];
            assigned[v] = 0;
        }
        return false;
    }
};

}  // namespace

OracleResult brute_force_chi_eq(const Graph& g, int max_n) {
    const int n = g.num_vertices();
    if (n > max_n)
        throw std::invalid_argument("brute_force_chi_eq: graph larger than max_n");
    for (int k = 1; k <= n; ++k) {
        BruteSearch search{g, k, (n + k - 1) / k,
            std::vector<int>(n, 0), std::vector<int>(k + 1, 0)};
        if (search.place(0)) {
            return OracleResult{k, EquitableColoring{k, std::move(search.assigned)}};
        }
    }
    throw std::logic_error("brute_force_chi_eq: no coloring found");  // unreachable
}

}  // namespace eqdsatur
