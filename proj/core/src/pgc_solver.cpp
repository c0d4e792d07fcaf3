#include "gcol/pgc_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "gcol/errors.hpp"

namespace gcol {

SpgcInstance SpgcInstance::make(Graph g, int k, std::vector<Biclique> bicliques) {
    if (k < 1) throw std::invalid_argument("SpgcInstance: k must be >= 1");
    SpgcInstance inst;
    inst.d = degeneracy_ordering(remove_edges(g, bicliques)).d;
    inst.g = std::move(g);
    inst.k = k;
    inst.bicliques = std::move(bicliques);
    return inst;
}

std::optional<PartialGrundyWitness>
find_witness_in_families(const Graph& g, const std::vector<std::vector<VertexSet>>& families) {
    const int k = int(families.size());
    const int n = g.num_vertices();

    std::vector<VertexSet> zones;
    for (const auto& fam : families) {
        VertexSet zone(n);
        for (const auto& y : fam) {
            if (!is_independent(g, y))
                throw std::invalid_argument("find_witness_in_families: non-independent member");
            zone |= y;
        }
        zones.push_back(zone);
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (zones[a].intersects(zones[b]))
                throw std::invalid_argument("find_witness_in_families: overlapping class zones");

    std::vector<VertexSet> chosen;
    chosen.reserve(k);
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == k) return true;
        for (const auto& y : families[t]) {
            // the class-t witness condition involves only earlier classes,
            // so this filter is exact, not just a heuristic prune
            bool has_dominator = false;
            y.for_each([&](int v) {
                if (has_dominator) return;
                bool all = true;
                for (int j = 0; j < t; ++j)
                    if (!g.neighbors(v).intersects(chosen[j])) all = false;
                if (all) has_dominator = true;
            });
            if (!has_dominator) continue;
            chosen.push_back(y);
            if (self(self, t + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    PartialGrundyWitness w;
    w.classes = std::move(chosen);
    GCOL_CHECK(verify_pgw(g, w).has_value());
    return w;
}

namespace {

// One A_1 trial: random class coloring, random biclique side per class,
// one sampler draw per class, direct witness check.
std::optional<PartialGrundyWitness> spgc_trial(const SpgcInstance& inst, Rng rng) {
    const int n = inst.g.num_vertices();
    const int k = inst.k;

    std::vector<VertexSet> zones(k, VertexSet(n));
    for (int v = 0; v < n; ++v) zones[rng.next_int(k)].set(v);

    std::vector<VertexSet> removed(k, VertexSet(n));
    for (int j = 0; j < k; ++j)
        for (const auto& b : inst.bicliques)
            removed[j] |= (rng.next_u64() & 1) ? b.right : b.left;

    PartialGrundyWitness w;
    w.classes.reserve(k);
    for (int j = 0; j < k; ++j) {
        VertexSet keep = zones[j] - removed[j];
        auto [sub, map] = induced_subgraph(inst.g, keep);
        DegeneracyOrdering ord = degeneracy_ordering(sub);
        VertexSet y_local = sample_independent_cover(sub, ord, rng);
        VertexSet y(n);
        y_local.for_each([&](int lv) { y.set(map[lv]); });
        w.classes.push_back(y);
    }
    if (!verify_pgw(inst.g, w)) return std::nullopt;
    return shrink_pgw(inst.g, w);
}

} // namespace

PgcResult solve_spgc_randomized(const SpgcInstance& inst, const SolveConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("solve_spgc_randomized: trials must be > 0");
    Rng base = Rng(cfg.seed).fork("spgc");
    PgcResult res;
    res.answer = SolveAnswer::no_witness_found;

    const int threads = std::max(1, cfg.threads);
    const uint64_t block = threads == 1 ? 1 : uint64_t(threads) * 8;
    for (uint64_t start = 0; start < cfg.trials && res.winning_trial < 0; start += block) {
        const uint64_t end = std::min(cfg.trials, start + block);
        std::vector<std::optional<PartialGrundyWitness>> found(end - start);
        if (threads == 1) {
            found[0] = spgc_trial(inst, base.fork(start));
        } else {
            std::vector<std::thread> pool;
            std::atomic<uint64_t> next{start};
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (uint64_t i = next.fetch_add(1); i < end; i = next.fetch_add(1))
                        found[i - start] = spgc_trial(inst, base.fork(i));
                });
            for (auto& th : pool) th.join();
        }
        for (uint64_t i = 0; i < end - start; ++i) {
            if (found[i]) {
                res.answer = SolveAnswer::yes;
                res.witness = std::move(found[i]);
                res.winning_trial = int64_t(start + i);
                break;
            }
        }
    }
    res.trials = res.winning_trial >= 0 ? uint64_t(res.winning_trial) + 1 : cfg.trials;
    return res;
}

namespace {

// Removal masks reachable inside zone by picking one side per biclique.
// The mask count is capped by 2^|zone| regardless of ell.
std::vector<VertexSet> reachable_removals(const std::vector<Biclique>& bicliques,
                                          const VertexSet& zone) {
    std::vector<VertexSet> masks{VertexSet(zone.universe())};
    std::unordered_set<VertexSet, VertexSetHash> seen{masks[0]};
    for (const auto& b : bicliques) {
        VertexSet l = b.left & zone;
        VertexSet r = b.right & zone;
        if (l == r) continue; // both empty: no effect on this zone
        std::vector<VertexSet> next;
        next.reserve(masks.size() * 2);
        seen.clear();
        for (const auto& m : masks)
            for (const VertexSet* side : {&l, &r}) {
                VertexSet nm = m | *side;
                if (seen.insert(nm).second) next.push_back(std::move(nm));
            }
        masks = std::move(next);
    }
    return masks;
}

} // namespace

PgcResult solve_spgc_deterministic(const SpgcInstance& inst, const SolveConfig& cfg) {
    const int n = inst.g.num_vertices();
    const int k = inst.k;
    PgcResult res;
    if (k > n) {
        // a witness needs k pairwise disjoint non-empty classes
        res.answer = SolveAnswer::no;
        return res;
    }

    const int p = std::min(k * k, n);
    FunctionFamily funcs = build_universal_set(n, p, k);
    if (funcs.count() > cfg.budget)
        throw budget_error("solve_spgc_deterministic: universal set exceeds the budget");

    // covering families memoized by the induced vertex set, in original ids
    std::unordered_map<VertexSet, std::vector<VertexSet>, VertexSetHash> cover_cache;
    Rng cover_rng_base = Rng(cfg.seed).fork("spgc-cover");
    uint64_t work = 0;

    auto covering_for = [&](const VertexSet& keep) -> const std::vector<VertexSet>& {
        auto it = cover_cache.find(keep);
        if (it != cover_cache.end()) return it->second;
        auto [sub, map] = induced_subgraph(inst.g, keep);
        Rng r = cover_rng_base.fork(keep.hash());
        CoveringFamily fam =
            build_covering_family(sub, k, CoverMode::certified, 24, r, cfg.certified_cap);
        std::vector<VertexSet> mapped;
        mapped.reserve(fam.sets.size());
        for (const auto& y : fam.sets) {
            VertexSet orig(n);
            y.for_each([&](int lv) { orig.set(map[lv]); });
            mapped.push_back(std::move(orig));
        }
        return cover_cache.emplace(keep, std::move(mapped)).first->second;
    };

    for (size_t fi = 0; fi < funcs.count(); ++fi) {
        ++res.phi_enumerated;
        if (++work > cfg.budget)
            throw budget_error("solve_spgc_deterministic: enumeration budget exhausted");

        std::vector<VertexSet> zones(k, VertexSet(n));
        for (int v = 0; v < n; ++v) zones[funcs.value(fi, v) - 1].set(v);
        bool empty_zone = false;
        for (const auto& z : zones)
            if (z.empty()) empty_zone = true;
        if (empty_zone) continue; // witness classes are non-empty, skip exactly

        std::vector<std::vector<VertexSet>> families(k);
        for (int j = 0; j < k; ++j) {
            auto masks = reachable_removals(inst.bicliques, zones[j]);
            work += masks.size();
            if (work > cfg.budget)
                throw budget_error("solve_spgc_deterministic: enumeration budget exhausted");
            std::unordered_set<VertexSet, VertexSetHash> seen;
            for (const auto& m : masks) {
                for (const auto& y : covering_for(zones[j] - m))
                    if (seen.insert(y).second) families[j].push_back(y);
            }
        }
        if (auto w = find_witness_in_families(inst.g, families)) {
            res.answer = SolveAnswer::yes;
            res.witness = std::move(w);
            return res;
        }
    }
    res.answer = SolveAnswer::no;
    return res;
}

namespace {

PgcResult dispatch_spgc(const SpgcInstance& inst, SolveMode mode, const SolveConfig& cfg) {
    return mode == SolveMode::det ? solve_spgc_deterministic(inst, cfg)
                                  : solve_spgc_randomized(inst, cfg);
}

PartialGrundyWitness witness_from_classes(const Graph& g, const Coloring& c) {
    PartialGrundyWitness w;
    for (int z = 1; z <= c.num_colors; ++z) w.classes.push_back(c.color_class(z));
    GCOL_CHECK(verify_pgw(g, w).has_value());
    return w;
}

PgcResult finish_with_witness(const Graph& g, int k, PgcResult res) {
    if (res.answer == SolveAnswer::yes) {
        Coloring c = pgw_to_coloring(g, *res.witness);
        GCOL_CHECK(c.num_colors >= k);
        GCOL_CHECK(is_partial_grundy_coloring(g, c));
        res.coloring = std::move(c);
    }
    return res;
}

} // namespace

PgcResult solve_pgc(const Graph& g, int k, SolveMode mode, const SolveConfig& cfg) {
    if (k < 1) throw std::invalid_argument("solve_pgc: k must be >= 1");
    auto reduced = degree_reduce(g, k);
    if (auto* c = std::get_if<Coloring>(&reduced)) {
        PgcResult res;
        res.answer = SolveAnswer::yes;
        res.witness = witness_from_classes(g, *c);
        res.coloring = std::move(*c);
        return res;
    }
    auto& dec = std::get<BicliqueDecomposition>(reduced);
    SpgcInstance inst = SpgcInstance::make(g, k, std::move(dec.bicliques));
    GCOL_CHECK(inst.d <= k * k * k);
    return finish_with_witness(g, k, dispatch_spgc(inst, mode, cfg));
}

PgcResult solve_pgc_degenerate(const Graph& g, int k, SolveMode mode, const SolveConfig& cfg) {
    if (k < 1) throw std::invalid_argument("solve_pgc_degenerate: k must be >= 1");
    SpgcInstance inst = SpgcInstance::make(g, k, {});
    return finish_with_witness(g, k, dispatch_spgc(inst, mode, cfg));
}

} // namespace gcol
