#pragma once

#include <optional>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/greedy.hpp"

namespace gcol {

/// Certificate that the partial Grundy number is at least classes.size():
/// pairwise disjoint independent sets (Q_1,...,Q_k) where each Q_i holds a
/// dominator, a vertex with a neighbor in every Q_j below it.
struct PartialGrundyWitness {
    std::vector<VertexSet> classes;

    int k() const { return int(classes.size()); }
};

/// Check the witness invariants. On success returns the smallest-id
/// qualifying dominator per class; on any violation returns nullopt.
std::optional<std::vector<int>> verify_pgw(const Graph& g, const PartialGrundyWitness& w);

/// Marking procedure: keep the smallest-id dominator of each class plus,
/// per dominator, one smallest-id neighbor in every lower class. Output
/// classes X_i satisfy X_i subset of Q_i and |X_i| <= k-i+1, and still
/// verify. Throws std::invalid_argument if w does not verify.
PartialGrundyWitness shrink_pgw(const Graph& g, const PartialGrundyWitness& w);

/// Color class Q_i with color i on the union of the witness, then extend
/// to the whole graph. Result is a partial Grundy coloring of g with at
/// least k colors. Throws std::invalid_argument if w does not verify.
Coloring pgw_to_coloring(const Graph& g, const PartialGrundyWitness& w);

/// The recursive labeled tree (T_k, l_k): the root carries label k and has
/// one child subtree per label below it, itself a Grundy tree. Nodes are
/// stored in a canonical preorder (children in decreasing label), so node
/// indices are stable across builds and serializations.
struct GrundyTree {
    int k = 0;
    std::vector<int> label;               ///< per node, in [k]
    std::vector<int> parent;              ///< -1 for the root
    std::vector<std::vector<int>> children;

    int size() const { return int(label.size()); }
    int root() const { return 0; }
};

/// Build (T_k, l_k). k must be >= 1. |V(T_k)| = 2^(k-1); labels count
/// 2^(k-z-1) nodes for z < k and exactly one node for z = k.
GrundyTree build_grundy_tree(int k);

/// Labeled homomorphism from a Grundy tree into the host graph: per-label
/// images independent, different labels mapped to different vertices, tree
/// edges mapped to host edges. Certifies Grundy number >= tree.k.
struct GrundyWitness {
    GrundyTree tree;
    std::vector<int> omega; ///< per tree node, a host vertex

    int k() const { return tree.k; }
};

bool verify_gw(const Graph& g, const GrundyWitness& w);

/// c_omega construction: label-z image gets color z, then extend. Result
/// is a Grundy coloring of g with at least tree.k colors. Throws
/// std::invalid_argument if w does not verify.
Coloring gw_to_coloring(const Graph& g, const GrundyWitness& w);

/// Label sweep from a coloring with the Grundy property and >= k colors:
/// the root maps to the smallest-id class-k vertex and every tree child
/// maps to the smallest-id neighbor of its parent's image in the child's
/// class. Throws std::invalid_argument if c lacks the property or colors.
GrundyWitness coloring_to_gw(const Graph& g, const Coloring& c, int k);

/// Is there a z-Grundy witness mapping entirely into wset? Top-down
/// backtracking over T_z in canonical node order. When label_of is given
/// (per-vertex labels in [z]), tree nodes may only map to vertices of
/// their own label; pass an empty vector for no constraint. When
/// required_root >= 0, the root must map to that vertex.
bool is_grundy_set(const Graph& g, const VertexSet& wset, int z,
                   const std::vector<int>& label_of = {});

/// Same search, but returns the witness found (nullopt when none exists).
std::optional<GrundyWitness> find_grundy_witness_in(const Graph& g, const VertexSet& wset, int z,
                                                    const std::vector<int>& label_of = {},
                                                    int required_root = -1);

} // namespace gcol
