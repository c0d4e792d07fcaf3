#pragma once

#include <cstdint>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/rng.hpp"

namespace gcol {

/// Family of independent sets. In certified mode every independent set of
/// size <= k of the host graph is contained in some member.
struct CoveringFamily {
    std::vector<VertexSet> sets;
    int k = 0;
    bool certified = false;
};

/// One draw of the independence-covering sampler: mark each vertex with
/// probability 1/(d+1), keep marked vertices with no marked neighbor later
/// in the degeneracy order. The output is always independent, and any
/// fixed independent X with |X| <= k survives with probability at least
/// (d+1)^-k * (d/(d+1))^(kd), which dominates the covering bound
/// (C(k(d+1),k) * k(d+1))^-1.
VertexSet sample_independent_cover(const Graph& g, const DegeneracyOrdering& ordering, Rng& rng);

enum class CoverMode { certified, monte_carlo };

/// monte_carlo: the union of `trials` sampler draws (coverage holds only
/// probabilistically). certified: sampler draws seeded from rng, then every
/// independent set of size <= k is enumerated and each uncovered one is
/// added verbatim, so the coverage invariant always holds. Certified mode
/// refuses graphs above `certified_cap` vertices.
CoveringFamily build_covering_family(const Graph& g, int k, CoverMode mode, int trials, Rng& rng,
                                     int certified_cap = 20);

/// (n,p,q)-universal function family: maps [n] -> [q] (1-based values)
/// realizing every assignment on every index set of size <= p. Stored flat,
/// count() rows of n entries.
struct FunctionFamily {
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<uint8_t> flat;
    size_t count_ = 0;

    size_t count() const { return count_; }
    int value(size_t fn, int idx) const { return flat[fn * size_t(n) + size_t(idx)]; }
};

/// Coverage-exact universal set. p == n enumerates all q^n functions;
/// p < n composes all q^p patterns over a greedily built (n,p)-perfect
/// hash family. Sizes are not the literature-optimal ones, only the
/// coverage contract is promised. Guards: p <= 6 for the composed backend,
/// n <= 64, and q^n <= 2^24 for the exhaustive backend.
FunctionFamily build_universal_set(int n, int p, int q);

} // namespace gcol
