#pragma once

#include "gcol/graph.hpp"
#include "gcol/rng.hpp"

namespace gcol {

Graph gen_gnp(int n, double prob, Rng& rng);
Graph gen_bipartite(int a, int b, double prob, Rng& rng);

/// Each vertex v >= 1 picks min(d, v) distinct random earlier neighbors,
/// so the result is d-degenerate by construction.
Graph gen_degenerate(int n, int d, Rng& rng);

Graph gen_complete(int n);
Graph gen_cycle(int n);

/// Star K_{1,n-1}: center 0 plus n-1 leaves.
Graph gen_star(int n);

Graph gen_path(int n);

} // namespace gcol
