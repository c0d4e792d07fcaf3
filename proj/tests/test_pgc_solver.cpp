#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcol/errors.hpp"
#include "gcol/oracle.hpp"
#include "gcol/pgc_solver.hpp"
#include "support/testutil.hpp"

using namespace gcol;
using namespace gcol::test;

namespace {

SolveConfig cfg_with(uint64_t seed, uint64_t trials = 2000, int threads = 1) {
    SolveConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.threads = threads;
    return cfg;
}

std::vector<VertexSet> singletons(int n, std::initializer_list<int> vs) {
    std::vector<VertexSet> out;
    for (int v : vs) out.push_back(VertexSet::singleton(n, v));
    return out;
}

} // namespace

TEST_CASE("find_witness_in_families basics") {
    Graph one(1);
    auto w = find_witness_in_families(one, {{VertexSet::singleton(1, 0)}});
    REQUIRE(w.has_value());
    CHECK(w->classes[0] == VertexSet::singleton(1, 0));

    Graph k2 = from_edges(2, {{0, 1}});
    auto w2 = find_witness_in_families(k2, {singletons(2, {0}), singletons(2, {1})});
    REQUIRE(w2.has_value());

    // P_4: families pinning the known 3-witness
    Graph g = p4();
    std::vector<std::vector<VertexSet>> fams = {
        {VertexSet::of(4, {2})}, {VertexSet::of(4, {0, 3})}, {VertexSet::of(4, {1})}};
    auto w3 = find_witness_in_families(g, fams);
    REQUIRE(w3.has_value());
    CHECK(verify_pgw(g, *w3).has_value());

    // overlapping zones rejected
    CHECK_THROWS_AS(
        find_witness_in_families(k2, {singletons(2, {0}), singletons(2, {0})}),
        std::invalid_argument);

    // no tuple verifies on an edgeless pair
    Graph pair(2);
    CHECK_FALSE(find_witness_in_families(pair, {singletons(2, {0}), singletons(2, {1})}));
}

TEST_CASE("randomized SPGC: soundness and hit rate") {
    // K_3, k=3, no bicliques: witness found and verified
    Graph k3 = gen_complete(3);
    auto inst = SpgcInstance::make(k3, 3, {});
    CHECK(inst.d == 2);
    auto res = solve_spgc_randomized(inst, cfg_with(42, 500));
    REQUIRE(res.answer == SolveAnswer::yes);
    CHECK(verify_pgw(k3, *res.witness).has_value());

    // K_2, k=3: never yes
    Graph k2 = from_edges(2, {{0, 1}});
    auto inst2 = SpgcInstance::make(k2, 3, {});
    auto res2 = solve_spgc_randomized(inst2, cfg_with(7, 1000));
    CHECK(res2.answer == SolveAnswer::no_witness_found);

    // P_4, k=3, fixed seed: yes observed within 10^4 trials
    auto inst3 = SpgcInstance::make(p4(), 3, {});
    CHECK(inst3.d == 1);
    auto res3 = solve_spgc_randomized(inst3, cfg_with(0xC0FFEE, 10000));
    REQUIRE(res3.answer == SolveAnswer::yes);
    CHECK(verify_pgw(p4(), *res3.witness).has_value());
    // shrunk witness sizes
    for (int i = 0; i < 3; ++i) CHECK(res3.witness->classes[i].count() <= 3 - i);
    CHECK_THROWS_AS(solve_spgc_randomized(inst3, cfg_with(1, 0)), std::invalid_argument);
}

TEST_CASE("randomized SPGC is deterministic per seed and across threads") {
    auto inst = SpgcInstance::make(random_graph(9, 77), 3, {});
    auto a = solve_spgc_randomized(inst, cfg_with(123, 400, 1));
    auto b = solve_spgc_randomized(inst, cfg_with(123, 400, 1));
    auto c = solve_spgc_randomized(inst, cfg_with(123, 400, 4));
    CHECK(a.answer == b.answer);
    CHECK(a.winning_trial == b.winning_trial);
    CHECK(a.winning_trial == c.winning_trial);
    if (a.witness) {
        REQUIRE(b.witness.has_value());
        REQUIRE(c.witness.has_value());
        for (int i = 0; i < a.witness->k(); ++i) {
            CHECK(a.witness->classes[i] == b.witness->classes[i]);
            CHECK(a.witness->classes[i] == c.witness->classes[i]);
        }
    }
}

TEST_CASE("deterministic SPGC on tiny instances") {
    Graph k3 = gen_complete(3);
    auto res = solve_spgc_deterministic(SpgcInstance::make(k3, 3, {}), cfg_with(5));
    CHECK(res.answer == SolveAnswer::yes);

    Graph k2 = from_edges(2, {{0, 1}});
    auto res2 = solve_spgc_deterministic(SpgcInstance::make(k2, 3, {}), cfg_with(5));
    CHECK(res2.answer == SolveAnswer::no);
}

TEST_CASE("deterministic SPGC matches the oracle on all graphs n <= 5, k <= 3") {
    SolveConfig cfg = cfg_with(99);
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            int truth = oracle_partial_grundy(g);
            for (int k = 1; k <= 3; ++k) {
                auto res = solve_spgc_deterministic(SpgcInstance::make(g, k, {}), cfg);
                CHECK((res.answer == SolveAnswer::yes) == (truth >= k));
                if (res.witness) CHECK(verify_pgw(g, *res.witness).has_value());
            }
        }
}

TEST_CASE("deterministic SPGC handles biclique side selections") {
    // K_{3,3} with its own biclique listed: partial Grundy number of K_{3,3}
    Graph g = complete_bipartite(3, 3);
    std::vector<Biclique> bic = {{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})}};
    int truth = oracle_partial_grundy(g);
    for (int k = 2; k <= 3; ++k) {
        auto inst = SpgcInstance::make(g, k, bic);
        CHECK(inst.d == 0); // removing the biclique empties the graph
        auto res = solve_spgc_deterministic(inst, cfg_with(3));
        CHECK((res.answer == SolveAnswer::yes) == (truth >= k));
    }
}

TEST_CASE("budget errors are explicit") {
    SolveConfig cfg = cfg_with(1);
    cfg.budget = 2;
    Graph g = random_graph(7, 4);
    CHECK_THROWS_AS(solve_spgc_deterministic(SpgcInstance::make(g, 3, {}), cfg), budget_error);
}

TEST_CASE("solve_pgc end to end") {
    SolveConfig cfg = cfg_with(17);
    // K_4, k=4
    auto res = solve_pgc(k4(), 4, SolveMode::det, cfg);
    CHECK(res.answer == SolveAnswer::yes);
    REQUIRE(res.coloring.has_value());
    CHECK(res.coloring->num_colors == 4);

    // P_4, k=4 -> no
    CHECK(solve_pgc(p4(), 4, SolveMode::det, cfg).answer == SolveAnswer::no);

    // C_5, k=3 -> yes with verified partial Grundy coloring
    auto res3 = solve_pgc(c5(), 3, SolveMode::det, cfg);
    CHECK(res3.answer == SolveAnswer::yes);
    REQUIRE(res3.coloring.has_value());
    CHECK(res3.coloring->num_colors >= 3);
    CHECK(is_partial_grundy_coloring(c5(), *res3.coloring));

    CHECK_THROWS_AS(solve_pgc(p4(), 0, SolveMode::det, cfg), std::invalid_argument);
}

TEST_CASE("solve_pgc_degenerate") {
    SolveConfig cfg = cfg_with(23);
    Graph star = gen_star(4); // K_{1,3}
    CHECK(solve_pgc_degenerate(star, 2, SolveMode::det, cfg).answer == SolveAnswer::yes);
    CHECK(solve_pgc_degenerate(star, 3, SolveMode::det, cfg).answer == SolveAnswer::no);
    CHECK(solve_pgc_degenerate(Graph(4), 2, SolveMode::det, cfg).answer == SolveAnswer::no);
    CHECK(solve_pgc_degenerate(Graph(0), 1, SolveMode::det, cfg).answer == SolveAnswer::no);
}

TEST_CASE("randomized pipeline never answers yes on no-instances") {
    Graph star = gen_star(5);
    int truth = oracle_partial_grundy(star); // 2
    REQUIRE(truth == 2);
    for (uint64_t seed = 0; seed < 50; ++seed) {
        auto res = solve_pgc(star, 3, SolveMode::rand, cfg_with(seed, 20));
        CHECK(res.answer != SolveAnswer::yes);
    }
}
