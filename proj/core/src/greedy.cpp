#include "gcol/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

bool is_proper(const Graph& g, const Coloring& c) {
    const int n = g.num_vertices();
    if (int(c.color.size()) != n) return false;
    std::vector<bool> used(c.num_colors + 1, false);
    for (int v = 0; v < n; ++v) {
        if (c.color[v] < 1 || c.color[v] > c.num_colors) return false;
        used[c.color[v]] = true;
        bool clash = false;
        g.neighbors(v).for_each([&](int u) {
            if (c.color[u] == c.color[v]) clash = true;
        });
        if (clash) return false;
    }
    for (int z = 1; z <= c.num_colors; ++z)
        if (!used[z]) return false;
    return true;
}

namespace {

// For vertex v: bitmask-free scan of which classes < limit contain a
// neighbor of v.
std::vector<bool> neighbor_classes(const Graph& g, const Coloring& c, int v, int limit) {
    std::vector<bool> seen(limit + 1, false);
    g.neighbors(v).for_each([&](int u) {
        if (c.color[u] >= 1 && c.color[u] <= limit) seen[c.color[u]] = true;
    });
    return seen;
}

} // namespace

bool is_grundy_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto seen = neighbor_classes(g, c, v, c.num_colors);
        for (int z = 1; z < c.color[v]; ++z)
            if (!seen[z]) return false;
    }
    return true;
}

bool is_partial_grundy_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (int z = 2; z <= c.num_colors; ++z) {
        bool dominated = false;
        for (int v = 0; v < g.num_vertices() && !dominated; ++v) {
            if (c.color[v] != z) continue;
            auto seen = neighbor_classes(g, c, v, z - 1);
            bool all = true;
            for (int j = 1; j < z; ++j)
                if (!seen[j]) all = false;
            if (all) dominated = true;
        }
        if (!dominated) return false;
    }
    return true;
}

static void check_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.num_vertices();
    if (int(order.size()) != n) throw std::invalid_argument("order is not a permutation");
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
    }
}

Coloring first_fit(const Graph& g, const std::vector<int>& order) {
    check_order(g, order);
    Coloring c;
    c.color.assign(g.num_vertices(), 0);
    for (int v : order) {
        auto seen = neighbor_classes(g, c, v, g.degree(v) + 1);
        int z = 1;
        while (seen[z]) ++z;
        c.color[v] = z;
        c.num_colors = std::max(c.num_colors, z);
    }
    return c;
}

Coloring last_fit(const Graph& g, const std::vector<int>& order) {
    check_order(g, order);
    Coloring c;
    c.color.assign(g.num_vertices(), 0);
    for (int v : order) {
        auto seen = neighbor_classes(g, c, v, c.num_colors);
        int z = c.num_colors;
        while (z >= 1 && seen[z]) --z;
        if (z == 0) z = ++c.num_colors;
        c.color[v] = z;
    }
    return c;
}

Coloring extend_coloring(const Graph& g, const VertexSet& sub, const Coloring& sub_coloring) {
    auto [h, map] = induced_subgraph(g, sub);
    if (!is_proper(h, sub_coloring))
        throw std::invalid_argument("sub_coloring is not a proper gap-free coloring of g[sub]");

    Coloring c;
    c.color.assign(g.num_vertices(), 0);
    c.num_colors = sub_coloring.num_colors;
    for (size_t i = 0; i < map.size(); ++i) c.color[map[i]] = sub_coloring.color[i];

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (sub.test(v)) continue;
        auto seen = neighbor_classes(g, c, v, c.num_colors);
        int z = 1;
        while (z <= c.num_colors && seen[z]) ++z;
        if (z > c.num_colors) c.num_colors = z; // dominates every class: open a new top color
        c.color[v] = z;
    }
    return c;
}

} // namespace gcol
