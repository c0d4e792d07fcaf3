#include "gcol/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

std::optional<std::vector<int>> verify_pgw(const Graph& g, const PartialGrundyWitness& w) {
    const int k = w.k();
    for (int i = 0; i < k; ++i) {
        if (w.classes[i].universe() != g.num_vertices()) return std::nullopt;
        if (w.classes[i].empty()) return std::nullopt;
        if (!is_independent(g, w.classes[i])) return std::nullopt;
        for (int j = 0; j < i; ++j)
            if (w.classes[i].intersects(w.classes[j])) return std::nullopt;
    }
    std::vector<int> dominators(k, -1);
    for (int i = 0; i < k; ++i) {
        int dom = -1;
        w.classes[i].for_each([&](int v) {
            if (dom != -1) return;
            bool all = true;
            for (int j = 0; j < i; ++j)
                if (!g.neighbors(v).intersects(w.classes[j])) all = false;
            if (all) dom = v;
        });
        if (dom == -1) return std::nullopt;
        dominators[i] = dom;
    }
    return dominators;
}

PartialGrundyWitness shrink_pgw(const Graph& g, const PartialGrundyWitness& w) {
    auto doms = verify_pgw(g, w);
    if (!doms) throw std::invalid_argument("shrink_pgw: input witness does not verify");
    const int k = w.k();
    VertexSet marked(g.num_vertices());
    for (int i = 0; i < k; ++i) {
        int u = (*doms)[i];
        marked.set(u);
        for (int j = 0; j < i; ++j) {
            int nb = (g.neighbors(u) & w.classes[j]).first();
            marked.set(nb);
        }
    }
    PartialGrundyWitness out;
    out.classes.reserve(k);
    for (int i = 0; i < k; ++i) out.classes.push_back(w.classes[i] & marked);
    return out;
}

Coloring pgw_to_coloring(const Graph& g, const PartialGrundyWitness& w) {
    if (!verify_pgw(g, w)) throw std::invalid_argument("pgw_to_coloring: invalid witness");
    VertexSet sub(g.num_vertices());
    for (const auto& q : w.classes) sub |= q;
    auto [h, map] = induced_subgraph(g, sub);
    Coloring sc;
    sc.color.assign(map.size(), 0);
    sc.num_colors = w.k();
    for (size_t i = 0; i < map.size(); ++i) {
        for (int z = 0; z < w.k(); ++z)
            if (w.classes[z].test(map[i])) sc.color[i] = z + 1;
    }
    return extend_coloring(g, sub, sc);
}

GrundyTree build_grundy_tree(int k) {
    if (k < 1) throw std::invalid_argument("build_grundy_tree: k must be >= 1");
    GrundyTree t;
    t.k = k;
    // Preorder with child subtrees in decreasing label: append(z, parent)
    // adds the whole z-Grundy tree below `parent`.
    auto append = [&](auto&& self, int z, int parent) -> void {
        int node = t.size();
        t.label.push_back(z);
        t.parent.push_back(parent);
        t.children.emplace_back();
        if (parent >= 0) t.children[parent].push_back(node);
        for (int child = z - 1; child >= 1; --child) self(self, child, node);
    };
    append(append, k, -1);
    return t;
}

bool verify_gw(const Graph& g, const GrundyWitness& w) {
    const GrundyTree& t = w.tree;
    if (t.k < 1 || t.size() != (1 << (t.k - 1))) return false;
    if (int(w.omega.size()) != t.size()) return false;
    for (int v : w.omega)
        if (v < 0 || v >= g.num_vertices()) return false;
    // 1) per-label images independent
    for (int z = 1; z <= t.k; ++z) {
        VertexSet image(g.num_vertices());
        for (int node = 0; node < t.size(); ++node)
            if (t.label[node] == z) image.set(w.omega[node]);
        if (!is_independent(g, image)) return false;
    }
    // 2) distinct labels map to distinct vertices
    for (int a = 0; a < t.size(); ++a)
        for (int b = a + 1; b < t.size(); ++b)
            if (t.label[a] != t.label[b] && w.omega[a] == w.omega[b]) return false;
    // 3) tree edges map to host edges
    for (int node = 1; node < t.size(); ++node)
        if (!g.has_edge(w.omega[node], w.omega[t.parent[node]])) return false;
    return true;
}

Coloring gw_to_coloring(const Graph& g, const GrundyWitness& w) {
    if (!verify_gw(g, w)) throw std::invalid_argument("gw_to_coloring: invalid witness");
    VertexSet sub(g.num_vertices());
    std::vector<int> col(g.num_vertices(), 0);
    for (int node = 0; node < w.tree.size(); ++node) {
        sub.set(w.omega[node]);
        col[w.omega[node]] = w.tree.label[node];
    }
    auto [h, map] = induced_subgraph(g, sub);
    Coloring sc;
    sc.color.assign(map.size(), 0);
    sc.num_colors = w.k();
    for (size_t i = 0; i < map.size(); ++i) sc.color[i] = col[map[i]];
    return extend_coloring(g, sub, sc);
}

GrundyWitness coloring_to_gw(const Graph& g, const Coloring& c, int k) {
    if (k < 1 || c.num_colors < k)
        throw std::invalid_argument("coloring_to_gw: coloring uses fewer than k colors");
    if (!is_grundy_coloring(g, c))
        throw std::invalid_argument("coloring_to_gw: coloring lacks the Grundy property");

    GrundyWitness w;
    w.tree = build_grundy_tree(k);
    w.omega.assign(w.tree.size(), -1);

    // Root: smallest-id vertex of class k. Each child labeled z takes the
    // smallest-id neighbor of its parent's image in class z; the Grundy
    // property guarantees one exists.
    int root_v = -1;
    for (int v = 0; v < g.num_vertices() && root_v == -1; ++v)
        if (c.color[v] == k) root_v = v;
    w.omega[w.tree.root()] = root_v;
    for (int node = 1; node < w.tree.size(); ++node) {
        int pv = w.omega[w.tree.parent[node]];
        int want = w.tree.label[node];
        int pick = -1;
        g.neighbors(pv).for_each([&](int u) {
            if (c.color[u] == want && (pick == -1 || u < pick)) pick = u;
        });
        w.omega[node] = pick;
    }
    return w;
}

namespace {

struct GrundySetSearch {
    const Graph& g;
    const GrundyTree& tree;
    const std::vector<int>& label_of;
    std::vector<int> candidates;            // wset as a vector, ascending
    std::vector<int> omega;                 // per node, -1 unassigned
    std::vector<VertexSet> label_image;     // per label (1-based), assigned images
    std::vector<std::vector<int>> vertex_labels; // per vertex, labels currently using it

    GrundySetSearch(const Graph& g_, const GrundyTree& t_, const VertexSet& wset,
                    const std::vector<int>& lbl)
        : g(g_), tree(t_), label_of(lbl), candidates(wset.to_vector()),
          omega(t_.size(), -1), label_image(t_.k + 1, VertexSet(g_.num_vertices())),
          vertex_labels(g_.num_vertices()) {}

    bool assignable(int node, int v) const {
        int z = tree.label[node];
        if (!label_of.empty() && label_of[v] != z) return false;
        // distinctness across labels
        for (int zl : vertex_labels[v])
            if (zl != z) return false;
        // per-label independence
        if (g.neighbors(v).intersects(label_image[z])) return false;
        // parent edge (preorder: parent already placed)
        int p = tree.parent[node];
        if (p >= 0 && !g.has_edge(v, omega[p])) return false;
        return true;
    }

    bool search(int node, int required_root) {
        if (node == tree.size()) return true;
        int z = tree.label[node];
        for (int v : candidates) {
            if (node == tree.root() && required_root >= 0 && v != required_root) continue;
            if (!assignable(node, v)) continue;
            omega[node] = v;
            label_image[z].set(v);
            vertex_labels[v].push_back(z);
            if (search(node + 1, required_root)) return true;
            vertex_labels[v].pop_back();
            if (vertex_labels[v].empty() ||
                std::find(vertex_labels[v].begin(), vertex_labels[v].end(), z) ==
                    vertex_labels[v].end())
                label_image[z].reset(v);
            omega[node] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<GrundyWitness> find_grundy_witness_in(const Graph& g, const VertexSet& wset, int z,
                                                    const std::vector<int>& label_of,
                                                    int required_root) {
    if (z < 1) throw std::invalid_argument("find_grundy_witness_in: z must be >= 1");
    GrundyTree t = build_grundy_tree(z);
    GrundySetSearch s(g, t, wset, label_of);
    if (!s.search(0, required_root)) return std::nullopt;
    GrundyWitness w;
    w.tree = std::move(t);
    w.omega = std::move(s.omega);
    return w;
}

bool is_grundy_set(const Graph& g, const VertexSet& wset, int z, const std::vector<int>& label_of) {
    return find_grundy_witness_in(g, wset, z, label_of).has_value();
}

} // namespace gcol
