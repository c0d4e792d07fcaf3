#pragma once

#include <map>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Per-vertex labels in [k] with precomputed class bitsets X_1..X_k.
struct LabelColoring {
    int k = 0;
    std::vector<int> chi; ///< per vertex, in [k]
    std::vector<VertexSet> classes;

    LabelColoring() = default;
    LabelColoring(std::vector<int> labels, int k_, int n);

    int label(int v) const { return chi[v]; }
    const VertexSet& cls(int z) const { return classes[z - 1]; }
};

/// k-dimensional size vector for the representative-set algebra. q[z-1]
/// is the required |B intersect X_z|.
struct SizeVector {
    std::vector<int> q;

    explicit SizeVector(int k = 0) : q(k, 0) {}
    int k() const { return int(q.size()); }
    int sum() const;
    bool operator==(const SizeVector& o) const { return q == o.q; }
    bool operator<(const SizeVector& o) const { return q < o.q; }
    bool leq(const SizeVector& o) const;
    SizeVector bumped(int z, int delta) const; ///< copy with q_z += delta, floored at 0
};

/// Family of chi-independent sets, each of size <= p. Order is insertion
/// order and is the canonical order every "arbitrary choice" resolves to.
struct SetFamily {
    int p = 0;
    std::vector<VertexSet> sets;

    int size() const { return int(sets.size()); }
};

/// Parameters of the representative computation for a K_{i,j}-free host.
/// eta and alpha follow the paper's accounting: eta = i * f_k * k and
/// alpha_p = 3k (p * eta)^(i+1); alpha is recomputed from the p of each
/// call.
struct RepParams {
    int i = 2;
    int j = 2;
    int k = 1;
    int f_k = 2; ///< budget: p + |q| <= f_k

    long long eta() const { return 1LL * i * f_k * k; }
    long double alpha(int p) const;
    long double heavy_bound(int p) const; ///< (p * eta)^(i+1)
};

bool is_chi_independent(const Graph& g, const LabelColoring& chi, const VertexSet& a);

/// A fits B when the union is chi-independent.
bool fits(const Graph& g, const LabelColoring& chi, const VertexSet& a, const VertexSet& b);

/// All pairwise unions that stay chi-independent and within `cap`
/// vertices, deduplicated, in f1-major order.
SetFamily star(const Graph& g, const LabelColoring& chi, const SetFamily& f1, const SetFamily& f2,
               int cap);

/// Greedy in family order: keep a set iff disjoint from all kept sets.
SetFamily maximal_disjoint_subfamily(const SetFamily& f);

/// The z-heavy vertices: members of X_z with at least `i` neighbors inside
/// X_z intersect U.
VertexSet heavy_vertices(const Graph& g, const VertexSet& u, const LabelColoring& chi, int z,
                         int i);

/// Memo for repeated representative calls, keyed on (p, q, family).
using RepMemo = std::map<std::tuple<int, std::vector<int>, std::vector<VertexSet>>, SetFamily>;

/// Compute F' subset of F with at most alpha^(2p+|q|) sets that
/// q-Grundy-represents F: for every B of size vector q, if some member of
/// F fits B then some member of F' does. Recursive hitting-set /
/// disjoint-family algorithm; requires p + |q| <= params.f_k. Throws
/// kij_error when the heavy-set bound fails, which certifies the host was
/// not K_{i,j}-free.
SetFamily grundy_representative(const SetFamily& f, int p, const SizeVector& q,
                                const RepParams& params, const LabelColoring& chi, const Graph& g,
                                RepMemo* memo = nullptr);

/// Definition-level oracle: enumerate every chi-independent B of size
/// vector q (sets whose slices clash fit nothing, so the restriction is
/// exact) and check that whenever some member of f fits B, a member of
/// f_sub does. Desk scale only.
bool is_representative(const SetFamily& f_sub, const SetFamily& f, const SizeVector& q,
                       const LabelColoring& chi, const Graph& g);

} // namespace gcol
