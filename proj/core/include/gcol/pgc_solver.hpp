#pragma once

#include <optional>
#include <vector>

#include "gcol/covering.hpp"
#include "gcol/degree_reduction.hpp"
#include "gcol/graph.hpp"
#include "gcol/rng.hpp"
#include "gcol/solve_types.hpp"
#include "gcol/witness.hpp"

namespace gcol {

/// SPGC instance: graph plus bicliques whose removal leaves a d-degenerate
/// graph. d is recomputed from the graph, never trusted from the caller.
struct SpgcInstance {
    Graph g;
    int k = 0;
    std::vector<Biclique> bicliques;
    int d = 0;

    int ell() const { return int(bicliques.size()); }
    static SpgcInstance make(Graph g, int k, std::vector<Biclique> bicliques);
};

struct PgcResult {
    SolveAnswer answer = SolveAnswer::no;
    std::optional<PartialGrundyWitness> witness;
    std::optional<Coloring> coloring;
    uint64_t trials = 0;        ///< attempts until the canonical winner (rand)
    int64_t winning_trial = -1; ///< -1 when no witness was found
    uint64_t phi_enumerated = 0;
};

/// Search the product F_1 x ... x F_k for the first tuple (in lexicographic
/// family order) that verifies as a k-partial-Grundy witness. Prefixes are
/// pruned unless the newest class holds a vertex adjacent into every
/// earlier chosen class, which is exactly the per-class witness condition.
/// Pre: members are independent; the family unions are pairwise disjoint.
std::optional<PartialGrundyWitness>
find_witness_in_families(const Graph& g, const std::vector<std::vector<VertexSet>>& families);

/// Independent runs of the one-sided-error trial: random class coloring,
/// random biclique side per class, one sampler draw per class, direct
/// witness check. Yes always carries a verified (and shrunk) witness.
PgcResult solve_spgc_randomized(const SpgcInstance& inst, const SolveConfig& cfg);

/// Full derandomization: class colorings from an (n, min(k^2,n), k)
/// universal set, per-class removal sets from the 2^ell side selections,
/// certified covering families for each reachable induced subgraph, and a
/// product search over the unioned families. No is exact. Work beyond
/// cfg.budget raises budget_error rather than answering.
PgcResult solve_spgc_deterministic(const SpgcInstance& inst, const SolveConfig& cfg);

/// The general pipeline: degree_reduce, then SPGC on the biclique output.
PgcResult solve_pgc(const Graph& g, int k, SolveMode mode, const SolveConfig& cfg);

/// Degenerate-graph fast path: SPGC with no bicliques, skipping degree
/// reduction entirely.
PgcResult solve_pgc_degenerate(const Graph& g, int k, SolveMode mode, const SolveConfig& cfg);

} // namespace gcol
