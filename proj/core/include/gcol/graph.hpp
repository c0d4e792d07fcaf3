#pragma once

#include <utility>
#include <vector>

#include "gcol/bitset.hpp"

namespace gcol {

/// Immutable simple undirected graph over vertices 0..n-1 with per-vertex
/// neighbor bitsets. Self-loops are rejected, duplicate edges collapse.
/// Safe to share across threads once constructed.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(n, VertexSet(n)) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    std::vector<std::pair<int, int>> edge_list() const;

private:
    int n_;
    int m_;
    std::vector<VertexSet> adj_;
};

/// Complete bipartite subgraph; both sides non-empty and disjoint, every
/// cross pair an edge of the host graph.
struct Biclique {
    VertexSet left;
    VertexSet right;
};

/// Does b satisfy the biclique invariants in g?
bool is_valid_biclique(const Graph& g, const Biclique& b);

struct DegeneracyOrdering {
    std::vector<int> order; ///< peeling order; every vertex has <= d neighbors later in it
    int d = 0;              ///< exact degeneracy
};

/// Min-degree bucket peeling; ties broken by smallest vertex id. The
/// reported d is the max residual degree seen over the peel, which equals
/// the degeneracy.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Induced subgraph on s plus the map from new ids back to g's ids
/// (ascending vertex order).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

/// G - F where F is the union of the bicliques' cross edges. Vertex set
/// unchanged. Throws std::invalid_argument on a biclique that is not
/// valid in g.
Graph remove_edges(const Graph& g, const std::vector<Biclique>& bicliques);

bool is_independent(const Graph& g, const VertexSet& s);

int max_degree(const Graph& g);

} // namespace gcol
