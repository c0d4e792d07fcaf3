#include "gcol/grundy_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "gcol/covering.hpp"
#include "gcol/errors.hpp"
#include "gcol/oracle.hpp"
#include "gcol/rng.hpp"

namespace gcol {

namespace {

int gamma_count(int k, int z) { return z == k ? 1 : 1 << (k - z - 1); }

// Componentwise box walk over all q <= cap; calls f on each vector.
template <typename F>
void for_each_leq(const SizeVector& cap, F&& f) {
    SizeVector cur(cap.k());
    auto rec = [&](auto&& self, int z) -> void {
        if (z == cap.k()) {
            f(cur);
            return;
        }
        for (int t = 0; t <= cap.q[z]; ++t) {
            cur.q[z] = t;
            self(self, z + 1);
        }
        cur.q[z] = 0;
    };
    rec(rec, 0);
}

void push_unique(SetFamily& fam, std::unordered_set<VertexSet, VertexSetHash>& seen,
                 const VertexSet& s) {
    if (seen.insert(s).second) fam.sets.push_back(s);
}

} // namespace

SizeVector qstar_vector(int k, int z) {
    if (z < 1 || z > k) throw std::invalid_argument("qstar_vector: z out of range");
    SizeVector out(k);
    for (int zp = 1; zp <= k; ++zp) {
        if (zp > z)
            out.q[zp - 1] = gamma_count(k, zp);
        else
            out.q[zp - 1] = gamma_count(k, zp) - gamma_count(z, zp);
    }
    return out;
}

namespace {

// gamma_k - sum_{zh <= zp} gamma_zh (embedded) - e_z, floored at zero:
// the label counts still open while combining child families 1..zp.
SizeVector combine_cap(int k, int z, int zp) {
    SizeVector out(k);
    for (int t = 1; t <= k; ++t) out.q[t - 1] = gamma_count(k, t);
    for (int zh = 1; zh <= zp; ++zh)
        for (int t = 1; t <= zh; ++t) out.q[t - 1] -= gamma_count(zh, t);
    out.q[z - 1] -= 1;
    for (int t = 0; t < k; ++t) out.q[t] = std::max(0, out.q[t]);
    return out;
}

// Union of per-vector representatives over the q <= cap box.
SetFamily reduce_over_box(const Graph& g, const LabelColoring& chi, const RepParams& params,
                          const SetFamily& fam, int p, const SizeVector& cap, RepMemo* memo) {
    SetFamily out;
    out.p = p;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for_each_leq(cap, [&](const SizeVector& q) {
        SetFamily r = grundy_representative(fam, p, q, params, chi, g, memo);
        for (const auto& s : r.sets) push_unique(out, seen, s);
    });
    return out;
}

} // namespace

FamilyTable compute_families(const Graph& g, const LabelColoring& chi, int k,
                             const RepParams& params) {
    const int n = g.num_vertices();
    FamilyTable table;
    table.fam.assign(k + 1, {});
    RepMemo memo;

    for (int v = 0; v < n; ++v)
        if (chi.label(v) == 1) {
            SetFamily f;
            f.p = 1;
            f.sets.push_back(VertexSet::singleton(n, v));
            table.fam[1].emplace(v, std::move(f));
        }

    VertexSet below(n); // union of X_1..X_{z-1} while at level z
    below |= chi.cls(1);

    for (int z = 2; z <= k; ++z) {
        const int cap_size = 1 << (z - 1);
        const SizeVector qz_box = qstar_vector(k, z);
        std::vector<int> level = chi.cls(z).to_vector();
        for (int v : level) {
            // per child label, gather neighbor families extended by v
            std::vector<SetFamily> reduced(z); // index by z' (1-based, up to z-1)
            bool dead = false;
            for (int zp = 1; zp < z && !dead; ++zp) {
                SetFamily raw;
                raw.p = std::min((1 << (zp - 1)) + 1, cap_size);
                std::unordered_set<VertexSet, VertexSetHash> seen;
                (g.neighbors(v) & chi.cls(zp)).for_each([&](int u) {
                    const SetFamily* fu = table.get(zp, u);
                    if (!fu) return;
                    for (const auto& w : fu->sets) {
                        VertexSet ext = w;
                        ext.set(v);
                        if (ext.count() > cap_size) continue;
                        if (!is_chi_independent(g, chi, ext)) continue;
                        push_unique(raw, seen, ext);
                    }
                });
                if (raw.sets.empty()) {
                    dead = true; // v cannot root a z-witness without a z' child
                    break;
                }
                reduced[zp] = reduce_over_box(g, chi, params, raw, raw.p, qz_box, &memo);
            }
            if (dead) continue;

            SetFamily acc = reduced[1];
            for (int zp = 2; zp < z; ++zp) {
                SetFamily tilde = star(g, chi, acc, reduced[zp], cap_size);
                if (tilde.sets.empty()) {
                    acc = tilde;
                    break;
                }
                acc = reduce_over_box(g, chi, params, tilde, cap_size, combine_cap(k, z, zp),
                                      &memo);
            }
            if (acc.sets.empty()) continue;

            SetFamily final_fam;
            final_fam.p = cap_size;
            std::vector<int> labels = chi.chi;
            for (const auto& a : acc.sets) {
                if (!is_grundy_set(g, a, z, labels)) continue;
                // stored-set invariants
                GCOL_CHECK(a.test(v));
                GCOL_CHECK(a.is_subset_of(below | chi.cls(z)));
                GCOL_CHECK(a.count() >= z && a.count() <= cap_size);
                GCOL_CHECK(is_chi_independent(g, chi, a));
                final_fam.sets.push_back(a);
            }
            if (final_fam.sets.empty()) continue;
            long double limit = ((long double)(1 << params.k) + 1) * logl(params.alpha(cap_size));
            GCOL_CHECK(logl((long double)final_fam.size()) <= limit + 1e-9L);
            table.fam[z].emplace(v, std::move(final_fam));
        }
        below |= chi.cls(z);
    }
    return table;
}

namespace {

struct ChiOutcome {
    bool hit = false;
    int root = -1;
    VertexSet set;
};

ChiOutcome run_chi(const Graph& g, const std::vector<int>& labels, int k,
                   const RepParams& params) {
    LabelColoring chi(labels, k, g.num_vertices());
    for (int z = 1; z <= k; ++z)
        if (chi.cls(z).empty()) return {}; // witness needs every label class
    FamilyTable table = compute_families(g, chi, k, params);
    ChiOutcome out;
    std::vector<int> xk = chi.cls(k).to_vector();
    for (int v : xk) {
        const SetFamily* f = table.get(k, v);
        if (f && !f->sets.empty()) {
            out.hit = true;
            out.root = v;
            out.set = f->sets.front();
            return out;
        }
    }
    return out;
}

GrundyResult finish_yes(const Graph& g, int k, const std::vector<int>& labels,
                        const ChiOutcome& hit, GrundyResult res) {
    // every stored set re-verifies as a Grundy set, so the backtracker
    // always recovers a witness inside it
    auto w = find_grundy_witness_in(g, hit.set, k, labels, hit.root);
    GCOL_CHECK(w.has_value());
    GCOL_CHECK(verify_gw(g, *w));
    Coloring c = gw_to_coloring(g, *w);
    GCOL_CHECK(c.num_colors >= k);
    GCOL_CHECK(is_grundy_coloring(g, c));
    res.answer = SolveAnswer::yes;
    res.witness = std::move(*w);
    res.coloring = std::move(c);
    return res;
}

} // namespace

GrundyResult solve_grundy_kij(const Graph& g, int k, int i, int j, SolveMode mode,
                              const SolveConfig& cfg) {
    if (k < 1) throw std::invalid_argument("solve_grundy_kij: k must be >= 1");
    if (i < j || j < 1) throw std::invalid_argument("solve_grundy_kij: need i >= j >= 1");
    if (k > cfg.max_grundy_k)
        throw std::invalid_argument("solve_grundy_kij: k exceeds the desk-scale guard");
    const int n = g.num_vertices();
    if (n <= 10 && oracle_has_kij(g, i, j))
        throw std::invalid_argument("solve_grundy_kij: input contains K_{i,j}");

    GrundyResult res;
    if (k > n) {
        res.answer = mode == SolveMode::det ? SolveAnswer::no : SolveAnswer::no_witness_found;
        return res;
    }

    RepParams params;
    params.i = i;
    params.j = j;
    params.k = k;
    params.f_k = 1 << k;

    if (mode == SolveMode::rand) {
        if (cfg.trials == 0)
            throw std::invalid_argument("solve_grundy_kij: trials must be > 0");
        Rng base = Rng(cfg.seed).fork("grundy");
        const int threads = std::max(1, cfg.threads);
        const uint64_t block = threads == 1 ? 1 : uint64_t(threads) * 8;

        auto attempt = [&](uint64_t t) -> std::optional<std::pair<std::vector<int>, ChiOutcome>> {
            Rng r = base.fork(t);
            std::vector<int> labels(n);
            for (int v = 0; v < n; ++v) labels[v] = r.next_int(k) + 1;
            ChiOutcome out = run_chi(g, labels, k, params);
            if (!out.hit) return std::nullopt;
            return std::make_pair(std::move(labels), std::move(out));
        };

        res.answer = SolveAnswer::no_witness_found;
        for (uint64_t start = 0; start < cfg.trials && res.winning_trial < 0; start += block) {
            const uint64_t end = std::min(cfg.trials, start + block);
            std::vector<std::optional<std::pair<std::vector<int>, ChiOutcome>>> found(end - start);
            if (threads == 1) {
                found[0] = attempt(start);
            } else {
                std::vector<std::thread> pool;
                std::atomic<uint64_t> next{start};
                for (int t = 0; t < threads; ++t)
                    pool.emplace_back([&] {
                        for (uint64_t x = next.fetch_add(1); x < end; x = next.fetch_add(1))
                            found[x - start] = attempt(x);
                    });
                for (auto& th : pool) th.join();
            }
            for (uint64_t x = 0; x < end - start; ++x)
                if (found[x]) {
                    res.winning_trial = int64_t(start + x);
                    res = finish_yes(g, k, found[x]->first, found[x]->second, std::move(res));
                    break;
                }
        }
        res.trials = res.winning_trial >= 0 ? uint64_t(res.winning_trial) + 1 : cfg.trials;
        return res;
    }

    // deterministic: universal set over labels; a minimal k-Grundy set has
    // at most 2^(k-1) vertices, so p = min(2^(k-1), n) suffices
    const int p = std::min(1 << (k - 1), n);
    FunctionFamily funcs = build_universal_set(n, p, k);
    if (funcs.count() > cfg.budget)
        throw budget_error("solve_grundy_kij: universal set exceeds the budget");
    uint64_t work = 0;
    for (size_t fi = 0; fi < funcs.count(); ++fi) {
        ++res.phi_enumerated;
        if (++work > cfg.budget) throw budget_error("solve_grundy_kij: budget exhausted");
        std::vector<int> labels(n);
        for (int v = 0; v < n; ++v) labels[v] = funcs.value(fi, v);
        ChiOutcome out = run_chi(g, labels, k, params);
        if (out.hit) return finish_yes(g, k, labels, out, std::move(res));
    }
    res.answer = SolveAnswer::no;
    return res;
}

} // namespace gcol
