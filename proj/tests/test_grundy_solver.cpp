#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcol/grundy_solver.hpp"
#include "gcol/oracle.hpp"
#include "support/testutil.hpp"

using namespace gcol;
using namespace gcol::test;

namespace {

SolveConfig cfg_with(uint64_t seed, uint64_t trials = 300, int threads = 1) {
    SolveConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.threads = threads;
    return cfg;
}

RepParams params22(int k) {
    RepParams p;
    p.i = 2;
    p.j = 2;
    p.k = k;
    p.f_k = 1 << k;
    return p;
}

} // namespace

TEST_CASE("qstar vectors") {
    SizeVector a = qstar_vector(3, 3);
    CHECK(a.q == std::vector<int>{0, 0, 0});
    SizeVector b = qstar_vector(3, 1);
    CHECK(b.q == std::vector<int>{1, 1, 1});
    SizeVector c = qstar_vector(4, 2);
    CHECK(c.q == std::vector<int>{3, 1, 1, 1});
    CHECK_THROWS_AS(qstar_vector(3, 4), std::invalid_argument);
}

TEST_CASE("compute_families on tiny graphs") {
    // edgeless: no families above level 1
    Graph e(3);
    LabelColoring chi({1, 2, 1}, 2, 3);
    FamilyTable t = compute_families(e, chi, 2, params22(2));
    CHECK(t.get(1, 0) != nullptr);
    CHECK(t.get(2, 1) == nullptr);

    // K_2 with labels (1,2): the pair is stored at level 2
    Graph k2(2, {{0, 1}});
    LabelColoring chi2({1, 2}, 2, 2);
    FamilyTable t2 = compute_families(k2, chi2, 2, params22(2));
    const SetFamily* f = t2.get(2, 1);
    REQUIRE(f != nullptr);
    REQUIRE(f->size() == 1);
    CHECK(f->sets[0] == VertexSet::full(2));

    // P_4 with the nice labeling (1,2,3,1): level-3 family at v2 non-empty
    LabelColoring chi3({1, 2, 3, 1}, 3, 4);
    FamilyTable t3 = compute_families(p4(), chi3, 3, params22(3));
    const SetFamily* f3 = t3.get(3, 2);
    REQUIRE(f3 != nullptr);
    CHECK_FALSE(f3->sets.empty());
    for (const auto& a : f3->sets) CHECK(is_grundy_set(p4(), a, 3, chi3.chi));
}

TEST_CASE("grundy solver on named graphs, deterministic") {
    SolveConfig cfg = cfg_with(4);
    auto res = solve_grundy_kij(gen_complete(3), 3, 2, 2, SolveMode::det, cfg);
    CHECK(res.answer == SolveAnswer::yes);
    REQUIRE(res.coloring.has_value());
    CHECK(res.coloring->num_colors >= 3);

    CHECK(solve_grundy_kij(gen_star(4), 3, 2, 2, SolveMode::det, cfg).answer == SolveAnswer::no);
    CHECK(solve_grundy_kij(gen_star(4), 2, 2, 2, SolveMode::det, cfg).answer == SolveAnswer::yes);
    CHECK(solve_grundy_kij(c5(), 3, 2, 2, SolveMode::det, cfg).answer == SolveAnswer::yes);
}

TEST_CASE("grundy solver yes certificates re-verify") {
    SolveConfig cfg = cfg_with(11);
    auto res = solve_grundy_kij(c5(), 3, 2, 2, SolveMode::det, cfg);
    REQUIRE(res.answer == SolveAnswer::yes);
    REQUIRE(res.witness.has_value());
    CHECK(verify_gw(c5(), *res.witness));
    REQUIRE(res.coloring.has_value());
    CHECK(is_grundy_coloring(c5(), *res.coloring));
    CHECK(res.coloring->num_colors >= 3);
}

TEST_CASE("grundy solver rejects K_{i,j} inputs at desk scale") {
    SolveConfig cfg = cfg_with(8);
    CHECK_THROWS_AS(solve_grundy_kij(gen_cycle(4), 2, 2, 2, SolveMode::det, cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_grundy_kij(c5(), 2, 1, 2, SolveMode::det, cfg), std::invalid_argument);
    SolveConfig guard = cfg_with(8);
    guard.max_grundy_k = 3;
    CHECK_THROWS_AS(solve_grundy_kij(c5(), 4, 2, 2, SolveMode::det, guard),
                    std::invalid_argument);
}

TEST_CASE("deterministic decisions match the oracle on K22-free graphs, n <= 5") {
    SolveConfig cfg = cfg_with(21);
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            if (oracle_has_kij(g, 2, 2)) continue;
            int gamma = oracle_grundy(g);
            for (int k = 1; k <= 3; ++k) {
                auto res = solve_grundy_kij(g, k, 2, 2, SolveMode::det, cfg);
                CHECK((res.answer == SolveAnswer::yes) == (gamma >= k));
            }
        }
}

TEST_CASE("randomized mode: soundness and seeded determinism") {
    Graph g = random_k22_free(8, 33);
    int gamma = oracle_grundy(g);
    auto res = solve_grundy_kij(g, std::min(3, gamma), 2, 2, SolveMode::rand, cfg_with(2, 400));
    CHECK(res.answer == SolveAnswer::yes);

    // no-instance: k above gamma never yields yes
    if (gamma < 3) {
        for (uint64_t seed = 0; seed < 30; ++seed) {
            auto r = solve_grundy_kij(g, 3, 2, 2, SolveMode::rand, cfg_with(seed, 30));
            CHECK(r.answer != SolveAnswer::yes);
        }
    }

    auto a = solve_grundy_kij(g, 2, 2, 2, SolveMode::rand, cfg_with(5, 100, 1));
    auto b = solve_grundy_kij(g, 2, 2, 2, SolveMode::rand, cfg_with(5, 100, 4));
    CHECK(a.answer == b.answer);
    CHECK(a.winning_trial == b.winning_trial);
}

TEST_CASE("monotone: yes at k implies yes at k-1") {
    SolveConfig cfg = cfg_with(13);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_k22_free(7, seed * 29 + 1);
        bool prev = true;
        for (int k = 1; k <= 3; ++k) {
            bool yes = solve_grundy_kij(g, k, 2, 2, SolveMode::det, cfg).answer ==
                       SolveAnswer::yes;
            if (!prev) CHECK_FALSE(yes);
            prev = yes;
        }
    }
}
