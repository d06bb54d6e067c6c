#include "eqdsatur/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace eqdsatur {

bool validate_equitable(const Graph& g, const EquitableColoring& c) {
    const int n = g.num_vertices();
    if (int(c.assigned.size()) != n)
        throw std::invalid_argument("coloring does not cover all vertices");
    if (c.k < 1 || c.k > n) throw std::invalid_argument("color count outside 1..n");
    for (int v = 0; v < n; ++v)
        if (c.assigned[v] < 1 || c.assigned[v] > c.k)
            throw std::invalid_argument("vertex color outside 1..k");

    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.assigned[u] == c.assigned[v]) return false;

    std::vector<int> size(c.k + 1, 0);
    for (int v = 0; v < n; ++v) ++size[c.assigned[v]];
    const int lo = n / c.k, hi = (n + c.k - 1) / c.k;
    for (int j = 1; j <= c.k; ++j)
        if (size[j] < lo || size[j] > hi || size[j] == 0) return false;
    return true;
}

void write_coloring(const EquitableColoring& c, std::ostream& out) {
    out << "s " << c.k << "\n";
    for (size_t v = 0; v < c.assigned.size(); ++v)
        out << v + 1 << " " << c.assigned[v] << "\n";
}

PartialColoring::PartialColoring(const Graph& g)
    : g_(&g),
      n_(g.num_vertices()),
      uncolored_count_(n_),
      assigned_(n_, 0),
      class_size_(n_ + 1, 0),
      uncolored_(n_),
      feasible_(n_, Bitset(n_)),
      nbr_color_count_(size_t(n_) * n_, 0) {
    for (int v = 0; v < n_; ++v) {
        uncolored_.set(v);
        feasible_[v].fill_first(n_);
    }
}

PartialColoring::Undo PartialColoring::apply(int u, int j) {
    assert(assigned_[u] == 0);
    assert(j >= 1 && j <= k_ + 1);
    assert(feasible_[u].test(j - 1));
    Undo undo{u, j, k_, max_class_size_};
    assigned_[u] = j;
    uncolored_.reset(u);
    --uncolored_count_;
    k_ = std::max(k_, j);
    max_class_size_ = std::max(max_class_size_, ++class_size_[j]);
    const int bit = j - 1;
    for (int v : g_->neighbors(u))
        if (nbr_color_count_[size_t(v) * n_ + bit]++ == 0) feasible_[v].reset(bit);
    return undo;
}

void PartialColoring::rollback(const Undo& undo) {
    const int u = undo.vertex, j = undo.color, bit = j - 1;
    assert(assigned_[u] == j);
    for (int v : g_->neighbors(u))
        if (--nbr_color_count_[size_t(v) * n_ + bit] == 0) feasible_[v].set(bit);
    --class_size_[j];
    k_ = undo.prev_k;
    max_class_size_ = undo.prev_max_class_size;
    assigned_[u] = 0;
    uncolored_.set(u);
    ++uncolored_count_;
}

EquitableColoring PartialColoring::to_coloring() const {
    return EquitableColoring{k_, assigned_};
}

bool PartialColoring::feasibility_consistent() const {
    for (int v = 0; v < n_; ++v) {
        Bitset expect(n_);
        expect.fill_first(n_);
        for (int w : g_->neighbors(v))
            if (assigned_[w] > 0) expect.reset(assigned_[w] - 1);
        if (!(feasible_[v] == expect)) return false;
    }
    return true;
}

PartialColoring initial_partial(const Graph& g, const VertexSet& q) {
    if (q.none()) throw std::invalid_argument("initial_partial: empty clique");
    if (!is_clique(g, q)) throw std::invalid_argument("initial_partial: Q is not a clique");
    PartialColoring pi(g);
    int color = 0;
    q.for_each([&](int v) { pi.apply(v, ++color); });
    return pi;
}

PartialColoring extend(const PartialColoring& pi, int u, int j) {
    if (u < 0 || u >= pi.n() || pi.color_of(u) != 0)
        throw std::invalid_argument("extend: vertex not uncolored");
    if (j < 1 || j > pi.k() + 1)
        throw std::invalid_argument("extend: color outside 1..k+1");
    if (!pi.color_feasible(u, j))
        throw std::invalid_argument("extend: color not feasible for vertex");
    PartialColoring out = pi;
    out.apply(u, j);
    return out;
}

bool check_p1(const PartialColoring& pi, int ub) {
    if (ub <= 1) throw std::invalid_argument("check_p1: UB must be at least 2");
    assert(pi.k() >= 1 && pi.k() < ub);
    const int threshold = std::max(pi.max_class_size() - 1, pi.n() / (ub - 1));
    long deficit = 0;
    for (int j = 1; j <= pi.k(); ++j)
        deficit += std::max(threshold - pi.class_size(j), 0);
    return pi.uncolored_count() >= deficit;
}

bool check_p2(const PartialColoring& pi, int lb) {
    assert(pi.k() >= 1 && lb >= 1);
    const int d = std::max(pi.k(), lb);
    return pi.max_class_size() <= (pi.n() + d - 1) / d;
}

}  // namespace eqdsatur
