#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/greedy.hpp"
#include "gcol/witness.hpp"

namespace gcol {

/// Output of the structural reduction: bicliques whose edge union F keeps
/// every residual degree below the stated bound (k^3 for the general
/// reduction, k^2 per one-sided call).
struct BicliqueDecomposition {
    std::vector<Biclique> bicliques;
    int k = 0;
};

/// One run of the one-sided bipartite procedure. Either a verified witness
/// (q reached k+1) or the bicliques plus the internals the correctness
/// claims quantify over.
struct OneSidedOutcome {
    std::optional<PartialGrundyWitness> witness; ///< set iff the answer is Yes

    std::vector<Biclique> a_bicliques; ///< (B_j, N(x_j) \ P), empties dropped
    std::vector<Biclique> s_bicliques; ///< ({x_j}, N(x_j)), empties dropped
    std::vector<VertexSet> q_classes;  ///< Q_1..Q_{q*-1}
    std::vector<int> dominators;       ///< x_1..x_{q*-1}
    std::vector<VertexSet> b_sets;     ///< B_1..B_{q*-1}

    bool yes() const { return witness.has_value(); }
    std::vector<Biclique> all_bicliques() const;
};

/// One-sided bipartite structural step. Processes `left` in non-increasing
/// degree order (ties by id), growing witness classes Q_1,Q_2,... until
/// either q reaches k+1 (Yes, with witness classes ordered Q_{q-1},...,Q_1)
/// or `left` is exhausted (bicliques; afterwards every left vertex has
/// degree <= k^2 in g minus the biclique edges).
///
/// Pre: (left, right) partitions the non-isolated part of g with every
/// edge across. Structural claims are re-checked at runtime.
OneSidedOutcome one_sided_reduce(const Graph& g, const VertexSet& left, const VertexSet& right,
                                 int k);

/// Both orientations of one_sided_reduce; at most 4k-4 bicliques whose
/// removal bounds every degree by k^2.
std::variant<PartialGrundyWitness, BicliqueDecomposition>
two_sided_reduce(const Graph& g, const VertexSet& left, const VertexSet& right, int k);

/// The full structural theorem. Either a partial Grundy coloring of g with
/// at least k colors, or at most 2k^3 bicliques with residual degree at
/// most k^3 everywhere.
std::variant<Coloring, BicliqueDecomposition> degree_reduce(const Graph& g, int k);

} // namespace gcol
