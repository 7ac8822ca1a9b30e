#include "dgs/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

namespace dgs {

Digraph Digraph::build(int n, std::span<const Arc> arcs) {
    if (n < 1) fail(ErrorKind::InvalidParameter, "vertex count must be at least 1, got " + std::to_string(n));
    std::map<std::pair<int, int>, int> merged;
    for (const Arc& a : arcs) {
        if (a.from < 1 || a.from > n || a.to < 1 || a.to > n) {
            fail(ErrorKind::IndexOutOfRange, "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                                 ") outside 1.." + std::to_string(n));
        }
        if (a.multiplicity < 1) {
            fail(ErrorKind::InvalidParameter, "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                                  ") has multiplicity " + std::to_string(a.multiplicity));
        }
        auto key = std::make_pair(a.from, a.to);
        auto it = merged.find(key);
        if (a.from != a.to && (a.multiplicity > 1 || it != merged.end())) {
            fail(ErrorKind::ParallelNonLoopArc,
                 "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") repeated");
        }
        merged[key] += a.multiplicity;
    }

    Digraph d;
    d.n_ = n;
    d.mult_.assign(static_cast<std::size_t>(n) * n, 0);
    d.succ_.assign(n, {});
    for (const auto& [key, mult] : merged) {
        d.arcs_.push_back({key.first, key.second, mult});
        d.mult_[static_cast<std::size_t>(key.first - 1) * n + (key.second - 1)] = mult;
        d.succ_[key.first - 1].push_back(key.second);
    }
    return d;
}

int Digraph::multiplicity(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        fail(ErrorKind::IndexOutOfRange, "vertex pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return mult_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

long long Digraph::arc_count() const noexcept {
    long long total = 0;
    for (const Arc& a : arcs_) total += a.multiplicity;
    return total;
}

bool Digraph::is_simple() const noexcept {
    return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.from != a.to && a.multiplicity == 1; });
}

const std::vector<int>& Digraph::successors(int i) const {
    if (i < 1 || i > n_) fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(i));
    return succ_[i - 1];
}

BigMatrix Digraph::adjacency() const {
    BigMatrix a(n_);
    for (const Arc& arc : arcs_) a(arc.from - 1, arc.to - 1) = arc.multiplicity;
    return a;
}

Digraph complement(const Digraph& d) {
    if (!d.is_simple()) fail(ErrorKind::NotSimple, "complement needs a loop-free digraph without multiplicities");
    const int n = d.order();
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && !d.has_arc(i, j)) arcs.push_back({i, j, 1});
    return Digraph::build(n, arcs);
}

namespace {

// BFS levels from vertex 1; -1 marks unreachable.
std::vector<int> bfs_levels(const Digraph& d, bool reverse) {
    const int n = d.order();
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : d.arcs()) {
        if (reverse)
            adj[a.to - 1].push_back(a.from - 1);
        else
            adj[a.from - 1].push_back(a.to - 1);
    }
    std::vector<int> level(n, -1);
    std::deque<int> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

bool all_reached(const std::vector<int>& level) {
    return std::none_of(level.begin(), level.end(), [](int l) { return l < 0; });
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    return all_reached(bfs_levels(d, false)) && all_reached(bfs_levels(d, true));
}

int cycle_gcd(const Digraph& d) {
    if (!is_strongly_connected(d)) fail(ErrorKind::NotStronglyConnected, "cycle gcd needs a strongly connected digraph");
    const auto level = bfs_levels(d, false);
    int g = 0;
    for (const Arc& a : d.arcs()) g = std::gcd(g, std::abs(level[a.from - 1] + 1 - level[a.to - 1]));
    // Single vertex without a loop has no cycles; report 0.
    return g;
}

WalkCountMatrix walk_count(const Digraph& d, unsigned k) { return {power(d.adjacency(), k), k}; }

}  // namespace dgs
