#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/greedy.hpp"
#include "gcol/grundy_rep.hpp"
#include "gcol/solve_types.hpp"
#include "gcol/witness.hpp"

namespace gcol {

/// DP tables: for each level z and vertex v in X_z, the stored family
/// F'_{z,v}. Every member contains v, lives in the union of X_1..X_z, is
/// chi-independent, has between z and 2^(z-1) vertices, and is a z-Grundy
/// set with tree labels matching chi.
struct FamilyTable {
    std::vector<std::unordered_map<int, SetFamily>> fam; ///< index by z (1-based)

    const SetFamily* get(int z, int v) const {
        auto it = fam[z].find(v);
        return it == fam[z].end() ? nullptr : &it->second;
    }
};

/// Label counts of T_k left after deleting one subtree rooted at a label-z
/// node: gamma_{k,z'} above z, gamma_{k,z'} - gamma_{z,z'} at or below.
SizeVector qstar_vector(int k, int z);

/// Run the level-by-level DP under the label coloring chi.
FamilyTable compute_families(const Graph& g, const LabelColoring& chi, int k,
                             const RepParams& params);

struct GrundyResult {
    SolveAnswer answer = SolveAnswer::no;
    std::optional<GrundyWitness> witness;
    std::optional<Coloring> coloring;
    uint64_t trials = 0;
    int64_t winning_trial = -1;
    uint64_t phi_enumerated = 0;
};

/// Grundy number >= k on a K_{i,j}-free graph. rand mode samples label
/// colorings; det mode walks an (n, min(2^(k-1), n), k) universal set and
/// its No is exact. Yes always carries a re-verified witness and coloring.
/// Desk-scale guards: k <= cfg.max_grundy_k, and inputs small enough for
/// the subgraph oracle are rejected when they do contain K_{i,j}.
GrundyResult solve_grundy_kij(const Graph& g, int k, int i, int j, SolveMode mode,
                              const SolveConfig& cfg);

} // namespace gcol
