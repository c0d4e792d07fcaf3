#include "gcol/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), m_(0), adj_(n, VertexSet(n)) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool is_valid_biclique(const Graph& g, const Biclique& b) {
    if (b.left.empty() || b.right.empty()) return false;
    if (b.left.intersects(b.right)) return false;
    bool ok = true;
    b.left.for_each([&](int u) {
        if (!b.right.is_subset_of(g.neighbors(u))) ok = false;
    });
    return ok;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.num_vertices();
    DegeneracyOrdering out;
    out.order.reserve(n);

    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        out.order.push_back(best);
        out.d = std::max(out.d, deg[best]);
        g.neighbors(best).for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices())
        throw std::invalid_argument("vertex set universe mismatch");
    std::vector<int> map = s.to_vector();
    std::vector<int> inv(g.num_vertices(), -1);
    for (size_t i = 0; i < map.size(); ++i) inv[map[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < map.size(); ++i) {
        (g.neighbors(map[i]) & s).for_each([&](int v) {
            if (map[i] < v) edges.emplace_back(int(i), inv[v]);
        });
    }
    return {Graph(int(map.size()), edges), std::move(map)};
}

Graph remove_edges(const Graph& g, const std::vector<Biclique>& bicliques) {
    for (const auto& b : bicliques)
        if (!is_valid_biclique(g, b))
            throw std::invalid_argument("invalid biclique for this graph");
    auto edges = g.edge_list();
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edges.size());
    for (auto [u, v] : edges) {
        bool dropped = false;
        for (const auto& b : bicliques) {
            if ((b.left.test(u) && b.right.test(v)) || (b.left.test(v) && b.right.test(u))) {
                dropped = true;
                break;
            }
        }
        if (!dropped) kept.emplace_back(u, v);
    }
    return Graph(g.num_vertices(), kept);
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
    return d;
}

} // namespace gcol
