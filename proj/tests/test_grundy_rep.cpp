#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gcol/grundy_rep.hpp"
#include "gcol/oracle.hpp"
#include "support/testutil.hpp"

using namespace gcol;
using namespace gcol::test;

namespace {

LabelColoring labels_of(const Graph& g, std::vector<int> chi, int k) {
    return LabelColoring(std::move(chi), k, g.num_vertices());
}

SetFamily family_of(int n, std::vector<std::vector<int>> sets, int p) {
    SetFamily f;
    f.p = p;
    for (const auto& s : sets) {
        VertexSet vs(n);
        for (int v : s) vs.set(v);
        f.sets.push_back(vs);
    }
    return f;
}

RepParams params_for(int k, int f_k, int i = 2, int j = 2) {
    RepParams p;
    p.i = i;
    p.j = j;
    p.k = k;
    p.f_k = f_k;
    return p;
}

// chi-independent random subsets of size <= p
SetFamily random_family(const Graph& g, const LabelColoring& chi, int p, int count, Rng& rng) {
    SetFamily f;
    f.p = p;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    int guard = 0;
    while (int(f.sets.size()) < count && ++guard < count * 60) {
        VertexSet s(g.num_vertices());
        int want = 1 + rng.next_int(p);
        for (int t = 0; t < want; ++t) s.set(rng.next_int(g.num_vertices()));
        if (s.count() == 0 || s.count() > p) continue;
        if (!is_chi_independent(g, chi, s)) continue;
        if (seen.insert(s).second) f.sets.push_back(s);
    }
    return f;
}

} // namespace

TEST_CASE("fits") {
    Graph k2 = from_edges(2, {{0, 1}});
    LabelColoring same = labels_of(k2, {1, 1}, 2);
    LabelColoring cross = labels_of(k2, {1, 2}, 2);
    VertexSet a = VertexSet::of(2, {0});
    VertexSet b = VertexSet::of(2, {1});
    CHECK_FALSE(fits(k2, same, a, b));
    CHECK(fits(k2, cross, a, b)); // cross-label edges allowed
    CHECK(fits(k2, same, VertexSet(2), b));
}

TEST_CASE("star") {
    Graph c4 = gen_cycle(4);
    LabelColoring chi = labels_of(c4, {1, 2, 1, 2}, 2);
    SetFamily f1 = family_of(4, {{0}}, 1);
    SetFamily f2 = family_of(4, {{1}}, 1);
    SetFamily joined = star(c4, chi, f1, f2, 2);
    REQUIRE(joined.size() == 1);
    CHECK(joined.sets[0] == VertexSet::of(4, {0, 1}));

    // identity against {emptyset}
    SetFamily empty_member = family_of(4, {{}}, 0);
    SetFamily same = star(c4, chi, empty_member, f2, 2);
    REQUIRE(same.size() == 1);
    CHECK(same.sets[0] == f2.sets[0]);

    // edgeless two-label graph: all pairs
    Graph e(4);
    LabelColoring chi2 = labels_of(e, {1, 1, 2, 2}, 2);
    SetFamily a = family_of(4, {{0}, {1}}, 1);
    SetFamily b = family_of(4, {{2}, {3}}, 1);
    CHECK(star(e, chi2, a, b, 2).size() == 4);
}

TEST_CASE("maximal_disjoint_subfamily is greedy in family order") {
    SetFamily f = family_of(5, {{0}, {0, 1}, {3}}, 2);
    SetFamily d = maximal_disjoint_subfamily(f);
    REQUIRE(d.size() == 2);
    CHECK(d.sets[0] == VertexSet::of(5, {0}));
    CHECK(d.sets[1] == VertexSet::of(5, {3}));

    SetFamily disjoint = family_of(5, {{0}, {1}, {2}}, 1);
    CHECK(maximal_disjoint_subfamily(disjoint).size() == 3);

    SetFamily overlapping = family_of(5, {{0, 1}, {1, 2}}, 2);
    SetFamily d2 = maximal_disjoint_subfamily(overlapping);
    REQUIRE(d2.size() == 1);
    CHECK(d2.sets[0] == VertexSet::of(5, {0, 1}));
}

TEST_CASE("heavy_vertices") {
    Graph star = gen_star(5); // center 0, leaves 1..4
    LabelColoring all1 = labels_of(star, {1, 1, 1, 1, 1}, 1);
    CHECK(heavy_vertices(star, VertexSet(5), all1, 1, 1).empty());
    VertexSet leaves = VertexSet::of(5, {1, 2, 3, 4});
    VertexSet heavy = heavy_vertices(star, leaves, all1, 1, 1);
    CHECK(heavy == VertexSet::of(5, {0})); // center has 4 same-label U-neighbors

    // C_5, i=2, U an independent pair: nobody has two same-label U-neighbors
    Graph c = c5();
    LabelColoring one = labels_of(c, {1, 1, 1, 1, 1}, 1);
    CHECK(heavy_vertices(c, VertexSet::of(5, {0, 2}), one, 1, 2).empty());
}

TEST_CASE("representative base cases") {
    Graph g(4);
    LabelColoring chi = labels_of(g, {1, 1, 2, 2}, 2);
    RepParams params = params_for(2, 4);

    // |q| = 0 keeps exactly the first set
    SetFamily f = family_of(4, {{0}, {1}, {2}}, 1);
    SetFamily r = grundy_representative(f, 1, SizeVector(2), params, chi, g);
    REQUIRE(r.size() == 1);
    CHECK(r.sets[0] == f.sets[0]);

    // p = 0 keeps {emptyset}
    SetFamily fe = family_of(4, {{}}, 0);
    SizeVector q2(2);
    q2.q = {1, 0};
    SetFamily r2 = grundy_representative(fe, 0, q2, params, chi, g);
    REQUIRE(r2.size() == 1);
    CHECK(r2.sets[0].empty());

    // budget violations are errors
    SizeVector big(2);
    big.q = {3, 3};
    CHECK_THROWS_AS(grundy_representative(f, 1, big, params, chi, g), std::invalid_argument);
}

TEST_CASE("representative output is a representing subfamily on random K22-free instances") {
    int case2_hits = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed * 3 + 1);
        int n = 6 + int(seed % 5);
        Graph g = random_k22_free(n, seed * 17 + 3);
        int k = 1 + int(seed % 3);
        std::vector<int> chi_v(n);
        for (int v = 0; v < n; ++v) chi_v[v] = 1 + rng.next_int(k);
        LabelColoring chi = labels_of(g, chi_v, k);
        int p = 1 + int(seed % 3);
        SetFamily f = random_family(g, chi, p, 6 + int(seed % 30), rng);
        if (f.sets.empty()) continue;
        SizeVector q(k);
        int budget = 3;
        for (int z = 0; z < k && budget > 0; ++z) {
            q.q[z] = rng.next_int(2);
            budget -= q.q[z];
        }
        RepParams params = params_for(k, p + q.sum());
        SetFamily sub = grundy_representative(f, p, q, params, chi, g);
        // subfamily
        for (const auto& s : sub.sets) {
            bool member = false;
            for (const auto& t : f.sets)
                if (s == t) member = true;
            CHECK(member);
        }
        // size bound
        long double bound = powl(params.alpha(p), 2 * p + q.sum());
        CHECK((long double)sub.size() <= bound);
        // the definition-level oracle
        CHECK(is_representative(sub, f, q, chi, g));
        (void)case2_hits;
    }
}

TEST_CASE("case 2 of the recursion triggers and stays correct") {
    // large disjoint family of singletons on a sparse K22-free graph with
    // small f_k so eta is within reach
    Rng rng(5);
    const int n = 24;
    Graph g = random_k22_free(n, 71, 0.15);
    std::vector<int> chi_v(n, 1);
    LabelColoring chi = labels_of(g, chi_v, 1);
    RepParams params = params_for(1, 2);
    REQUIRE(params.eta() == 4);
    SetFamily f;
    f.p = 1;
    for (int v = 0; v < n; ++v) f.sets.push_back(VertexSet::singleton(n, v));
    SizeVector q(1);
    q.q = {1};
    SetFamily sub = grundy_representative(f, 1, q, params, chi, g);
    CHECK(is_representative(sub, f, q, chi, g));
    CHECK(sub.size() <= f.size());
}

TEST_CASE("union property of representatives") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed + 100);
        int n = 7;
        Graph g = random_k22_free(n, seed * 5 + 9);
        int k = 2;
        std::vector<int> chi_v(n);
        for (int v = 0; v < n; ++v) chi_v[v] = 1 + rng.next_int(k);
        LabelColoring chi = labels_of(g, chi_v, k);
        SetFamily f1 = random_family(g, chi, 2, 8, rng);
        SetFamily f2 = random_family(g, chi, 2, 8, rng);
        if (f1.sets.empty() || f2.sets.empty()) continue;
        SizeVector q(k);
        q.q = {1, 1};
        RepParams params = params_for(k, 4);
        SetFamily r1 = grundy_representative(f1, 2, q, params, chi, g);
        SetFamily r2 = grundy_representative(f2, 2, q, params, chi, g);
        SetFamily joined;
        joined.p = 2;
        joined.sets = r1.sets;
        for (const auto& s : r2.sets) joined.sets.push_back(s);
        SetFamily whole;
        whole.p = 2;
        whole.sets = f1.sets;
        for (const auto& s : f2.sets) whole.sets.push_back(s);
        CHECK(is_representative(joined, whole, q, chi, g));
    }
}

TEST_CASE("star composition preserves representation") {
    // the rep-compose property: reducing both factors over the premise
    // vector ranges, then starring, still represents the starred family
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Rng rng(seed + 500);
        int n = 7;
        Graph g = random_k22_free(n, seed * 13 + 29);
        int k = 2;
        std::vector<int> chi_v(n);
        for (int v = 0; v < n; ++v) chi_v[v] = 1 + rng.next_int(k);
        LabelColoring chi = labels_of(g, chi_v, k);
        SetFamily f1 = random_family(g, chi, 1, 6, rng);
        SetFamily f2 = random_family(g, chi, 1, 6, rng);
        if (f1.sets.empty() || f2.sets.empty()) continue;
        SizeVector q(k);
        q.q = {1, 0};
        RepParams params = params_for(k, 4);

        auto reduce_over = [&](const SetFamily& f, int p_other) {
            SetFamily out;
            out.p = f.p;
            std::unordered_set<VertexSet, VertexSetHash> seen;
            // every vector q' >= q with |q'| <= |q| + p_other
            for (int d1 = 0; d1 <= p_other; ++d1)
                for (int d2 = 0; d2 + d1 <= p_other; ++d2) {
                    SizeVector qq = q;
                    qq.q[0] += d1;
                    qq.q[1] += d2;
                    SetFamily r = grundy_representative(f, f.p, qq, params, chi, g);
                    for (const auto& s : r.sets)
                        if (seen.insert(s).second) out.sets.push_back(s);
                }
            return out;
        };
        SetFamily r1 = reduce_over(f1, f2.p);
        SetFamily r2 = reduce_over(f2, f1.p);
        SetFamily lhs = star(g, chi, r1, r2, 2);
        SetFamily rhs = star(g, chi, f1, f2, 2);
        CHECK(is_representative(lhs, rhs, q, chi, g));
    }
}
