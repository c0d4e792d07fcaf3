#pragma once

#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Total proper coloring; colors are 1-based and gap-free (every color in
/// 1..num_colors is used).
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;

    VertexSet color_class(int z) const {
        VertexSet s(int(color.size()));
        for (int v = 0; v < int(color.size()); ++v)
            if (color[v] == z) s.set(v);
        return s;
    }
};

bool is_proper(const Graph& g, const Coloring& c);

/// Every vertex colored z has a neighbor in every class below z (the
/// first-fit reachability property).
bool is_grundy_coloring(const Graph& g, const Coloring& c);

/// Every class z has at least one vertex with neighbors in all classes
/// below z (the last-fit reachability property).
bool is_partial_grundy_coloring(const Graph& g, const Coloring& c);

/// First-fit greedy along `order`: each vertex gets the smallest color not
/// seen on its already-colored neighbors.
Coloring first_fit(const Graph& g, const std::vector<int>& order);

/// Last-fit greedy along `order`: each vertex gets the largest already-used
/// color absent among its colored neighbors, opening a new top color only
/// when every used color is blocked.
Coloring last_fit(const Graph& g, const std::vector<int>& order);

/// Extend a proper coloring of g[sub] to all of g. Uncolored vertices are
/// processed in increasing id; each gets the smallest class it has no
/// neighbor in, or a new top color if it dominates every class. Never
/// recolors sub and never decreases num_colors; preserves both the partial
/// Grundy and the Grundy property of the input.
///
/// sub_coloring is indexed by the induced subgraph's ids (ascending order
/// of sub, as produced by induced_subgraph).
Coloring extend_coloring(const Graph& g, const VertexSet& sub, const Coloring& sub_coloring);

} // namespace gcol
