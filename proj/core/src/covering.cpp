#include "gcol/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gcol/errors.hpp"

namespace gcol {

VertexSet sample_independent_cover(const Graph& g, const DegeneracyOrdering& ordering, Rng& rng) {
    const int n = g.num_vertices();
    if (int(ordering.order.size()) != n)
        throw std::invalid_argument("sample_independent_cover: ordering does not match graph");
    const double mark_prob = 1.0 / double(ordering.d + 1);

    VertexSet marked(n);
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(mark_prob)) marked.set(v);

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ordering.order[i]] = i;

    VertexSet out(n);
    marked.for_each([&](int v) {
        bool blocked = false;
        (g.neighbors(v) & marked).for_each([&](int u) {
            if (pos[u] > pos[v]) blocked = true;
        });
        if (!blocked) out.set(v);
    });
    GCOL_CHECK(is_independent(g, out));
    return out;
}

namespace {

// All independent sets of size <= k, ascending-id enumeration.
void enumerate_independent_sets(const Graph& g, int k,
                                const std::function<void(const VertexSet&)>& emit) {
    const int n = g.num_vertices();
    VertexSet cur(n);
    auto rec = [&](auto&& self, int from, int left) -> void {
        emit(cur);
        if (left == 0) return;
        for (int v = from; v < n; ++v) {
            if (g.neighbors(v).intersects(cur)) continue;
            cur.set(v);
            self(self, v + 1, left - 1);
            cur.reset(v);
        }
    };
    rec(rec, 0, k);
}

void push_unique(std::vector<VertexSet>& sets, std::unordered_set<VertexSet, VertexSetHash>& seen,
                 const VertexSet& s) {
    if (seen.insert(s).second) sets.push_back(s);
}

} // namespace

CoveringFamily build_covering_family(const Graph& g, int k, CoverMode mode, int trials, Rng& rng,
                                     int certified_cap) {
    if (k < 1) throw std::invalid_argument("build_covering_family: k must be >= 1");
    if (trials < 0) throw std::invalid_argument("build_covering_family: negative trial count");
    if (mode == CoverMode::certified && g.num_vertices() > certified_cap)
        throw std::invalid_argument("build_covering_family: graph exceeds the certified-mode cap");

    CoveringFamily fam;
    fam.k = k;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    DegeneracyOrdering ord = degeneracy_ordering(g);
    for (int t = 0; t < trials; ++t)
        push_unique(fam.sets, seen, sample_independent_cover(g, ord, rng));

    if (mode == CoverMode::monte_carlo) return fam;

    // Certification: every independent set of size <= k must lie inside a
    // member; each uncovered one joins the family verbatim.
    enumerate_independent_sets(g, k, [&](const VertexSet& s) {
        for (const auto& y : fam.sets)
            if (s.is_subset_of(y)) return;
        push_unique(fam.sets, seen, s);
    });
    fam.certified = true;
    for (const auto& y : fam.sets) GCOL_CHECK(is_independent(g, y));
    return fam;
}

namespace {

// Greedy (n,p)-perfect hash family: while some p-subset is injectively
// hashed by no member, add a function tailored to the first such subset.
std::vector<std::vector<uint8_t>> greedy_perfect_hash_family(int n, int p) {
    std::vector<std::vector<uint8_t>> family;
    if (p == 1 || n < p) {
        // single constant function suffices: injectivity on singletons
        family.emplace_back(n, uint8_t(0));
        return family;
    }
    std::vector<int> comb(p);
    auto injective = [&](const std::vector<uint8_t>& h) {
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                if (h[comb[a]] == h[comb[b]]) return false;
        return true;
    };
    bool added = true;
    while (added) {
        added = false;
        // first uncovered combination in lexicographic order
        for (int i = 0; i < p; ++i) comb[i] = i;
        while (true) {
            bool covered = false;
            for (const auto& h : family)
                if (injective(h)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                std::vector<uint8_t> h(n);
                for (int v = 0; v < n; ++v) h[v] = uint8_t(v % p);
                for (int i = 0; i < p; ++i) h[comb[i]] = uint8_t(i);
                family.push_back(std::move(h));
                added = true;
                break;
            }
            // next combination
            int i = p - 1;
            while (i >= 0 && comb[i] == n - p + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int t = i + 1; t < p; ++t) comb[t] = comb[t - 1] + 1;
        }
    }
    return family;
}

} // namespace

FunctionFamily build_universal_set(int n, int p, int q) {
    if (n < 0 || n > 64) throw std::invalid_argument("build_universal_set: n out of range");
    if (p < 1 || q < 1) throw std::invalid_argument("build_universal_set: p and q must be >= 1");
    if (p > n || q > n) throw std::invalid_argument("build_universal_set: need p,q <= n");

    FunctionFamily fam;
    fam.n = n;
    fam.p = p;
    fam.q = q;

    if (p == n) {
        // exhaustive backend: all q^n functions, lexicographic
        long double total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        if (total > (1 << 24))
            throw budget_error("build_universal_set: q^n exceeds the exhaustive-backend cap");
        size_t cnt = size_t(total + 0.5L);
        fam.flat.reserve(cnt * size_t(n));
        std::vector<uint8_t> digits(n, 1);
        for (size_t idx = 0; idx < cnt; ++idx) {
            fam.flat.insert(fam.flat.end(), digits.begin(), digits.end());
            for (int i = n - 1; i >= 0; --i) {
                if (digits[i] < q) {
                    ++digits[i];
                    break;
                }
                digits[i] = 1;
            }
        }
        fam.count_ = cnt;
        return fam;
    }

    if (p > 6)
        throw std::invalid_argument("build_universal_set: composed backend limited to p <= 6");

    auto phf = greedy_perfect_hash_family(n, p);
    // all q^p patterns composed over each hash function; duplicates dropped
    size_t patterns = 1;
    for (int i = 0; i < p; ++i) patterns *= size_t(q);
    std::unordered_set<std::string> seen;
    std::vector<uint8_t> pat(p);
    for (const auto& h : phf) {
        std::fill(pat.begin(), pat.end(), uint8_t(1));
        for (size_t pi = 0; pi < patterns; ++pi) {
            std::string row(n, '\0');
            for (int v = 0; v < n; ++v) row[v] = char(pat[h[v]]);
            if (seen.insert(row).second) {
                for (char c : row) fam.flat.push_back(uint8_t(c));
                ++fam.count_;
            }
            for (int i = p - 1; i >= 0; --i) {
                if (pat[i] < q) {
                    ++pat[i];
                    break;
                }
                pat[i] = 1;
            }
        }
    }
    return fam;
}

} // namespace gcol
