#include <doctest.h>

#include "oracle.hpp"
#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

using namespace tpg;
using namespace tpg::testing;

TEST_CASE("generic embedding search") {
    CHECK(contains_subgraph(clique(4), path_graph(4)));
    CHECK_FALSE(contains_subgraph(star(6), path_graph(4)));
    CHECK_FALSE(contains_subgraph(friendship_graph(7), cycle_graph(4)));
    CHECK(contains_subgraph(clique(3), clique(3)));
    CHECK_FALSE(contains_subgraph(path_graph(3), clique(3)));
    // disconnected pattern
    CHECK(contains_subgraph(path_graph(5), matching_graph(2)));
    CHECK_FALSE(contains_subgraph(star(9), matching_graph(2)));
}

TEST_CASE("clique detector") {
    CHECK_FALSE(contains_clique(turan_graph(10, 4), 4));
    CHECK(contains_clique(clique(5), 4));
    CHECK_FALSE(contains_clique(cycle_graph(5), 3));
    CHECK(contains_clique(Graph(1), 1));
    CHECK_FALSE(contains_clique(Graph(0), 1));
}

TEST_CASE("path detector") {
    CHECK_FALSE(contains_path(h_graph(12, 5), 5));
    CHECK(contains_path(cycle_graph(5), 5));
    CHECK(contains_path(clique(4), 4));
    CHECK_FALSE(contains_path(Graph(6), 2));
}

TEST_CASE("even cycle detector") {
    CHECK_FALSE(contains_even_cycle(friendship_graph(9)));
    CHECK(contains_even_cycle(cycle_graph(6)));
    // two triangles sharing an edge hide a 4-cycle through both apexes
    Graph shared = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(contains_even_cycle(shared));
    CHECK_FALSE(contains_even_cycle(cycle_graph(7)));
    CHECK_FALSE(contains_even_cycle(path_graph(8)));
}

TEST_CASE("complete bipartite detector") {
    CHECK(contains_complete_bipartite(clique(5), 2, 3));
    CHECK(contains_complete_bipartite(cycle_graph(4), 2, 2));
    CHECK_FALSE(contains_complete_bipartite(friendship_graph(9), 2, 2));
    CHECK(contains_complete_bipartite(star(5), 1, 4));
    CHECK_FALSE(contains_complete_bipartite(star(5), 1, 5));
}

TEST_CASE("matching size") {
    CHECK(max_matching_size(matching_graph(3)) == 3);
    CHECK(max_matching_size(star(6)) == 1);
    CHECK(max_matching_size(path_graph(5)) == 2);
    CHECK(max_matching_size(Graph(4)) == 0);
    CHECK(max_matching_size(clique(7)) == 3);
}

TEST_CASE("pattern dispatch examples") {
    CHECK(is_pattern_free(friendship_graph(7), even_cycle_family_pattern()));
    CHECK(is_pattern_free(h_graph(10, 6), path_pattern(6)));
    CHECK(is_pattern_free(complete_bipartite(5, 5), clique_pattern(3)));
    CHECK_FALSE(is_pattern_free(clique(4), star_pattern(4)));
    CHECK(is_pattern_free(near_regular(8, 2), star_pattern(4)));
}

TEST_CASE("specialized detectors agree with the generic oracle") {
    std::vector<Pattern> patterns;
    for (const char* text :
         {"P4", "P5", "P6", "K3", "K4", "K5", "C4", "C5", "C6", "M2", "M3",
          "S4", "S5", "Kab:2,2", "Kab:2,3", "Sstar:5", "Dstar:2"})
        patterns.push_back(parse_pattern(text));
    for (int n = 1; n <= 6; ++n) {
        auto classes = brute_force_classes(n, [](const Graph&) { return true; });
        for (const Graph& g : classes)
            for (const Pattern& pat : patterns) {
                Graph pg = pat.single_graph();
                bool generic =
                    pg.order() <= g.order() && contains_subgraph(g, pg);
                CHECK(is_pattern_free(g, pat) == !generic);
            }
    }
}

TEST_CASE("even-cycle test equals iterated C_2t containment") {
    for (int n = 1; n <= 7; ++n) {
        auto classes = brute_force_classes(n, [](const Graph&) { return true; });
        for (const Graph& g : classes) {
            bool any = false;
            for (int t = 2; 2 * t <= n && !any; ++t)
                any = contains_subgraph(g, cycle_graph(2 * t));
            CHECK(contains_even_cycle(g) == any);
        }
    }
}

TEST_CASE("pattern freeness is hereditary") {
    std::vector<std::pair<Pattern, Graph>> cases = {
        {path_pattern(5), h_graph(12, 5)},
        {even_cycle_family_pattern(), friendship_graph(11)},
        {clique_pattern(4), turan_graph(10, 4)},
        {matching_pattern(3), star(8)},
    };
    for (auto& [pat, g] : cases) {
        REQUIRE(is_pattern_free(g, pat));
        for (auto [u, v] : g.edges()) {
            Graph h = g;
            h.remove_edge(u, v);
            CHECK(is_pattern_free(h, pat));
        }
    }
}

TEST_CASE("pattern grammar") {
    CHECK(parse_pattern("Cstar").kind == Pattern::Kind::EvenCycleFamily);
    CHECK(parse_pattern("K4").to_string() == "K4");
    CHECK(parse_pattern("forest:2,2").to_string() == "forest:2,2");
    CHECK_THROWS_AS(parse_pattern("K1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("C2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("g6:A?"), std::invalid_argument);  // no edge
    CHECK_THROWS_AS(parse_pattern("Kab:3,2"), std::invalid_argument);
    CHECK_THROWS_AS(even_cycle_family_pattern().single_graph(),
                    std::invalid_argument);
}
