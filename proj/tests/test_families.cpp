#include <doctest.h>

#include "tpgraph/canonical.hpp"
#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

using namespace tpg;

TEST_CASE("complete multipartite") {
    CHECK(ep(complete_multipartite({{5, 5}}), 2) == 250);
    CHECK(isomorphic(complete_multipartite({{1, 7}}), star(8)));
    CHECK(isomorphic(complete_multipartite({{1, 1, 1}}), clique(3)));
    CHECK_THROWS_AS(complete_multipartite({{}}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({{0, 3}}), std::invalid_argument);
}

TEST_CASE("turan graphs") {
    CHECK(isomorphic(turan_graph(7, 3), complete_bipartite(4, 3)));
    CHECK(ep(turan_graph(7, 3), 2) == 84);
    CHECK(degree_sequence(turan_graph(10, 4)).values ==
          std::vector<int>{7, 7, 7, 7, 7, 7, 6, 6, 6, 6});
    CHECK(ep(turan_graph(10, 3), 4) == 6250);
    CHECK(isomorphic(turan_graph(2, 5), clique(2)));  // fewer classes than k-1
}

TEST_CASE("h graphs") {
    Graph h125 = h_graph(12, 5);
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(ep(h125, p) == ipow(11, p) + ipow(2, p + 1) + 9);
    CHECK(isomorphic(h_graph(9, 4), star(9)));
    CHECK(degree_sequence(h_graph(8, 6)).values ==
          std::vector<int>{7, 7, 2, 2, 2, 2, 2, 2});
    CHECK(ep(h_graph(8, 6), 2) == 122);
    CHECK(isomorphic(h_graph(1, 5), star(1)));
    CHECK(isomorphic(h_graph(2, 5), star(2)));
    CHECK(isomorphic(h_graph(3, 5), clique(3)));
    CHECK_THROWS_AS(h_graph(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(h_graph(5, 3), std::invalid_argument);
}

TEST_CASE("friendship graphs") {
    CHECK(ep(friendship_graph(7), 2) == 60);
    CHECK(ep(friendship_graph(6), 2) == 42);
    CHECK(friendship_graph(9).edge_count() == 12);
    for (int n = 3; n <= 40; ++n) {
        Graph fn = friendship_graph(n);
        BigInt expect = n % 2 == 1 ? BigInt(n) * n + 2 * n - 3
                                   : BigInt(n) * n + 2 * n - 6;
        CHECK(ep(fn, 2) == expect);
        CHECK(fn.edge_count() == (n - 1) + (n - 1) / 2);
        CHECK(fn.edge_count() == 3 * (n - 1) / 2);
    }
}

TEST_CASE("named small families") {
    CHECK(degree_sequence(near_star(5)).values ==
          std::vector<int>{3, 2, 1, 1, 1});
    CHECK(isomorphic(near_star(4), path_graph(4)));
    CHECK(isomorphic(double_star(2), path_graph(4)));
    CHECK(degree_sequence(near_regular(7, 3)).values ==
          std::vector<int>{3, 3, 3, 3, 3, 3, 2});
    CHECK(degree_sequence(near_regular(8, 3)).values ==
          std::vector<int>(8, 3));
    CHECK_THROWS_AS(near_regular(4, 4), std::invalid_argument);
    Graph forest = even_linear_forest({2, 4});
    CHECK(forest.order() == 6);
    CHECK(forest.edge_count() == 4);
    CHECK_THROWS_AS(even_linear_forest({3}), std::invalid_argument);
    CHECK(matching_graph(3).order() == 6);
    CHECK(matching_graph(3).edge_count() == 3);
    Graph paw = pendant_extension(clique(3));
    CHECK(degree_sequence(paw).values == std::vector<int>{3, 2, 2, 1});
}

TEST_CASE("family grammar") {
    for (const char* text :
         {"K4", "P5", "C6", "S5", "M3", "Kab:2,3", "Sstar:5", "Dstar:3",
          "forest:2,4", "g6:Bw"}) {
        FamilySpec spec = parse_family(text);
        CHECK(spec.to_string() == text);
        CHECK(build_family(spec).order() >= 1);
    }
    CHECK(isomorphic(build_family(parse_family("Kab:2,3")),
                     complete_bipartite(2, 3)));
    CHECK(isomorphic(build_family(parse_family("g6:Bw")), clique(3)));
    CHECK_THROWS_AS(parse_family("Cstar"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("Q7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("K"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("forest:2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("Kab:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("constructed families avoid their forbidden patterns") {
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 14; ++n)
            CHECK_FALSE(contains_clique(turan_graph(n, k), k));
    for (int k = 4; k <= 9; ++k)
        for (int n = k; n <= 14; ++n)
            CHECK_FALSE(contains_path(h_graph(n, k), k));
    for (int n = 1; n <= 20; ++n)
        CHECK_FALSE(contains_even_cycle(friendship_graph(n)));
}
