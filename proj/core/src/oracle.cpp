#include "gcol/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcol {

namespace {

void guard_size(const Graph& g, int cap, const char* who) {
    if (g.num_vertices() > cap)
        throw std::invalid_argument(std::string(who) + ": graph too large for brute force");
}

// Backtracking over the coloring characterization of the Grundy number.
// Vertices are colored in id order; a vertex colored z must end up with a
// neighbor in every class below z. Enforced lazily: an optimistic count
// prune while neighbors are open, an exact check once a neighborhood
// closes.
struct GrundyColoringSearch {
    const Graph& g;
    int n;
    std::vector<int> color; // 0 = uncolored
    std::vector<int> uncolored_nbrs;
    int best = 0;

    explicit GrundyColoringSearch(const Graph& gr)
        : g(gr), n(gr.num_vertices()), color(gr.num_vertices(), 0),
          uncolored_nbrs(gr.num_vertices()) {
        for (int v = 0; v < n; ++v) uncolored_nbrs[v] = g.degree(v);
    }

    bool dominates_exact(int v) const {
        std::vector<bool> seen(color[v], false);
        g.neighbors(v).for_each([&](int u) {
            if (color[u] > 0 && color[u] < color[v]) seen[color[u]] = true;
        });
        for (int z = 1; z < color[v]; ++z)
            if (!seen[z]) return false;
        return true;
    }

    // Classes below color[v] with no colored neighbor yet must each be
    // coverable by a distinct still-uncolored neighbor.
    bool dominates_possible(int v) const {
        std::vector<bool> seen(color[v], false);
        g.neighbors(v).for_each([&](int u) {
            if (color[u] > 0 && color[u] < color[v]) seen[color[u]] = true;
        });
        int missing = 0;
        for (int z = 1; z < color[v]; ++z)
            if (!seen[z]) ++missing;
        return missing <= uncolored_nbrs[v];
    }

    // Colors cannot be normalized by first occurrence: domination is
    // asymmetric in the class order. So every vertex ranges over its full
    // candidate set 1..deg+1 and gap-freeness is checked at the leaf.
    void run(int v, int used_max) {
        if (v == n) {
            std::vector<bool> used(used_max + 1, false);
            for (int u = 0; u < n; ++u) used[color[u]] = true;
            for (int z = 1; z <= used_max; ++z)
                if (!used[z]) return;
            best = std::max(best, used_max);
            return;
        }
        for (int z = 1; z <= g.degree(v) + 1; ++z) {
            bool clash = false;
            g.neighbors(v).for_each([&](int u) {
                if (color[u] == z) clash = true;
            });
            if (clash) continue;
            color[v] = z;
            g.neighbors(v).for_each([&](int u) { --uncolored_nbrs[u]; });
            bool ok = dominates_possible(v);
            if (ok && uncolored_nbrs[v] == 0) ok = dominates_exact(v);
            if (ok) {
                g.neighbors(v).for_each([&](int u) {
                    if (ok && color[u] > 0 && uncolored_nbrs[u] == 0 && !dominates_exact(u))
                        ok = false;
                });
            }
            if (ok) run(v + 1, std::max(used_max, z));
            g.neighbors(v).for_each([&](int u) { ++uncolored_nbrs[u]; });
            color[v] = 0;
        }
    }
};

} // namespace

int oracle_grundy(const Graph& g) {
    guard_size(g, 10, "oracle_grundy");
    if (g.num_vertices() == 0) return 0;
    GrundyColoringSearch s(g);
    s.run(0, 0);
    return s.best;
}

int oracle_grundy_by_orderings(const Graph& g) {
    guard_size(g, 10, "oracle_grundy_by_orderings");
    const int n = g.num_vertices();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        best = std::max(best, first_fit(g, order).num_colors);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

namespace {

// Feasibility of "partial Grundy number >= k" over labelings V -> {0..k},
// label 0 meaning "not in the witness".
struct PartialGrundySearch {
    const Graph& g;
    int n, k;
    std::vector<int> vorder; // descending degree, then id
    std::vector<VertexSet> cls;
    VertexSet unassigned;
    int empty_classes;

    PartialGrundySearch(const Graph& gr, int kk)
        : g(gr), n(gr.num_vertices()), k(kk), cls(kk + 1, VertexSet(gr.num_vertices())),
          unassigned(VertexSet::full(gr.num_vertices())), empty_classes(kk) {
        vorder.resize(n);
        std::iota(vorder.begin(), vorder.end(), 0);
        std::stable_sort(vorder.begin(), vorder.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    // Every class must still admit a dominator: a vertex already in the
    // class, or an unassigned one that could join it, whose lower classes
    // are each fed by an assigned or still-unassigned neighbor.
    bool classes_alive() const {
        for (int z = 2; z <= k; ++z) {
            bool alive = false;
            for (int v = 0; v < n && !alive; ++v) {
                if (!cls[z].test(v)) {
                    if (!unassigned.test(v)) continue;
                    if (g.neighbors(v).intersects(cls[z])) continue;
                }
                bool all = true;
                for (int j = 1; j < z && all; ++j) {
                    if (g.neighbors(v).intersects(cls[j])) continue;
                    VertexSet open = unassigned & g.neighbors(v);
                    open.reset(v);
                    if (open.empty()) all = false;
                }
                if (all) alive = true;
            }
            if (!alive) return false;
        }
        return true;
    }

    bool leaf_valid() const {
        for (int z = 1; z <= k; ++z) {
            if (cls[z].empty()) return false;
            bool dom = false;
            cls[z].for_each([&](int v) {
                if (dom) return;
                bool all = true;
                for (int j = 1; j < z; ++j)
                    if (!g.neighbors(v).intersects(cls[j])) all = false;
                if (all) dom = true;
            });
            if (!dom) return false;
        }
        return true;
    }

    bool run(int idx) {
        if (idx == n) return leaf_valid();
        int v = vorder[idx];
        int remaining_after = n - idx - 1;
        for (int z = 1; z <= k; ++z) {
            if (g.neighbors(v).intersects(cls[z])) continue;
            bool was_empty = cls[z].empty();
            cls[z].set(v);
            unassigned.reset(v);
            if (was_empty) --empty_classes;
            bool ok = empty_classes <= remaining_after && classes_alive();
            if (ok && run(idx + 1)) return true;
            if (was_empty) ++empty_classes;
            unassigned.set(v);
            cls[z].reset(v);
        }
        unassigned.reset(v);
        bool found = empty_classes <= remaining_after && classes_alive() && run(idx + 1);
        unassigned.set(v);
        return found;
    }
};

} // namespace

int oracle_partial_grundy(const Graph& g) {
    guard_size(g, 10, "oracle_partial_grundy");
    const int n = g.num_vertices();
    if (n == 0) return 0;

    std::vector<int> id_order(n);
    std::iota(id_order.begin(), id_order.end(), 0);
    int lb = std::max(first_fit(g, id_order).num_colors, last_fit(g, id_order).num_colors);

    // A class-t dominator needs t-1 distinct neighbors, so the sorted
    // degree sequence bounds the answer from above.
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::sort(degs.rbegin(), degs.rend());
    int ub = 0;
    for (int kk = n; kk >= 1; --kk) {
        bool ok = true;
        for (int t = 0; t < kk; ++t)
            if (degs[t] < kk - 1 - t) ok = false;
        if (ok) {
            ub = kk;
            break;
        }
    }

    for (int kk = ub; kk > lb; --kk) {
        PartialGrundySearch s(g, kk);
        if (s.run(0)) return kk;
    }
    return lb;
}

bool oracle_has_kij(const Graph& g, int i, int j) {
    guard_size(g, 16, "oracle_has_kij");
    if (i < 1 || j < 1) throw std::invalid_argument("oracle_has_kij: sides must be >= 1");
    const int n = g.num_vertices();
    if (i + j > n) return false;
    std::vector<int> pick(i);
    bool found = false;
    // enumerate i-subsets A; any j vertices adjacent to all of A complete a K_{i,j}
    auto rec = [&](auto&& self, int start, int depth, const VertexSet& common) -> void {
        if (found) return;
        if (depth == i) {
            VertexSet b = common;
            for (int a = 0; a < i; ++a) b.reset(pick[a]);
            if (b.count() >= j) found = true;
            return;
        }
        for (int v = start; v < n && !found; ++v) {
            pick[depth] = v;
            VertexSet next = depth == 0 ? g.neighbors(v) : (common & g.neighbors(v));
            if (next.count() >= j) self(self, v + 1, depth + 1, next);
        }
    };
    rec(rec, 0, 0, VertexSet(n));
    return found;
}

namespace {

struct SmallPgwSearch {
    const Graph& g;
    int n, k;
    std::vector<VertexSet> classes;
    VertexSet used;
    std::optional<PartialGrundyWitness> result;

    SmallPgwSearch(const Graph& gr, int kk)
        : g(gr), n(gr.num_vertices()), k(kk), classes(kk, VertexSet(gr.num_vertices())),
          used(gr.num_vertices()) {}

    void capture() {
        PartialGrundyWitness w;
        w.classes = classes;
        result = w;
    }

    // Optional extra members of class i beyond its dominator; extras only
    // exist to feed later dominators.
    bool extras(int i, int from, int left) {
        if (next_class(i + 1)) return true;
        if (left == 0) return false;
        for (int v = from; v < n; ++v) {
            if (used.test(v)) continue;
            if (g.neighbors(v).intersects(classes[i])) continue;
            classes[i].set(v);
            used.set(v);
            bool hit = extras(i, v + 1, left - 1);
            used.reset(v);
            classes[i].reset(v);
            if (hit) return true;
        }
        return false;
    }

    bool next_class(int i) {
        if (i == k) {
            capture();
            return true;
        }
        int cap = k - i; // |X_{i+1}| <= k - (i+1) + 1, 0-based i
        for (int dom = 0; dom < n; ++dom) {
            if (used.test(dom)) continue;
            bool dominates = true;
            for (int j = 0; j < i && dominates; ++j)
                if (!g.neighbors(dom).intersects(classes[j])) dominates = false;
            if (!dominates) continue;
            classes[i].set(dom);
            used.set(dom);
            bool hit = extras(i, 0, cap - 1);
            used.reset(dom);
            classes[i].reset(dom);
            if (hit) return true;
        }
        return false;
    }
};

} // namespace

std::optional<PartialGrundyWitness> brute_force_small_pgw(const Graph& g, int k) {
    guard_size(g, 10, "brute_force_small_pgw");
    if (k < 1) throw std::invalid_argument("brute_force_small_pgw: k must be >= 1");
    SmallPgwSearch s(g, k);
    s.next_class(0);
    if (s.result && !verify_pgw(g, *s.result))
        throw std::logic_error("brute_force_small_pgw: search produced an invalid witness");
    return s.result;
}

} // namespace gcol
