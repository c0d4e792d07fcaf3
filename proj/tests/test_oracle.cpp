#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcol/oracle.hpp"
#include "support/testutil.hpp"

using namespace gcol;
using namespace gcol::test;

TEST_CASE("grundy number of named graphs") {
    CHECK(oracle_grundy(gen_complete(1)) == 1);
    CHECK(oracle_grundy(gen_complete(4)) == 4);
    CHECK(oracle_grundy(gen_complete(6)) == 6);
    CHECK(oracle_grundy(p4()) == 3);
    CHECK(oracle_grundy(gen_star(4)) == 2); // K_{1,3}
    CHECK(oracle_grundy(c5()) == 3);
    CHECK(oracle_grundy(Graph(3)) == 1); // edgeless
    CHECK(oracle_grundy(Graph(0)) == 0);
}

TEST_CASE("partial grundy number of named graphs") {
    CHECK(oracle_partial_grundy(gen_complete(3)) == 3);
    CHECK(oracle_partial_grundy(gen_complete(5)) == 5);
    CHECK(oracle_partial_grundy(gen_cycle(4)) == 3);
    CHECK(oracle_partial_grundy(gen_star(4)) == 2);
    CHECK(oracle_partial_grundy(gen_star(7)) == 2);
    CHECK(oracle_partial_grundy(p4()) == 3);
    CHECK(oracle_partial_grundy(from_edges(2, {{0, 1}})) == 2);
    CHECK(oracle_partial_grundy(Graph(0)) == 0);
}

TEST_CASE("two grundy formulations agree on all graphs up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            CHECK(oracle_grundy(g) == oracle_grundy_by_orderings(g));
}

TEST_CASE("partial grundy dominates grundy on all graphs up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            CHECK(oracle_partial_grundy(g) >= oracle_grundy(g));
}

TEST_CASE("kij subgraph detection") {
    CHECK(oracle_has_kij(gen_cycle(4), 2, 2));
    CHECK_FALSE(oracle_has_kij(gen_star(6), 2, 2)); // trees have no K_{2,2}
    CHECK_FALSE(oracle_has_kij(p4(), 2, 2));
    CHECK(oracle_has_kij(complete_bipartite(2, 3), 2, 3));
    CHECK(oracle_has_kij(gen_complete(4), 2, 2));
    CHECK_FALSE(oracle_has_kij(gen_complete(3), 2, 2));
}

TEST_CASE("small partial grundy witness search") {
    CHECK(brute_force_small_pgw(gen_complete(3), 3).has_value());
    CHECK_FALSE(brute_force_small_pgw(from_edges(2, {{0, 1}}), 3).has_value());
    auto w = brute_force_small_pgw(p4(), 3);
    REQUIRE(w.has_value());
    CHECK(verify_pgw(p4(), *w).has_value());
    for (int i = 0; i < 3; ++i) CHECK(w->classes[i].count() <= 3 - i);
}

TEST_CASE("small witness exists exactly when the oracle says >= k, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            int pg = oracle_partial_grundy(g);
            for (int k = 1; k <= n; ++k)
                CHECK(brute_force_small_pgw(g, k).has_value() == (pg >= k));
        }
}

TEST_CASE("size guards reject large graphs") {
    Graph big(11);
    CHECK_THROWS_AS((void)oracle_grundy(big), std::invalid_argument);
    CHECK_THROWS_AS((void)oracle_partial_grundy(big), std::invalid_argument);
    CHECK_THROWS_AS((void)brute_force_small_pgw(big, 2), std::invalid_argument);
}
