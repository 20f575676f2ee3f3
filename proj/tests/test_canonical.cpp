#include <doctest.h>

#include <unordered_set>

#include "oracle.hpp"
#include "tpgraph/canonical.hpp"
#include "tpgraph/families.hpp"

using namespace tpg;
using namespace tpg::testing;

TEST_CASE("relabelings share a key") {
    Graph p4a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph p4b = make_graph(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_key(p4a) == canonical_key(p4b));
    CHECK(isomorphic(p4a, p4b));
}

TEST_CASE("different classes get different keys") {
    CHECK(canonical_key(path_graph(4)) != canonical_key(star(4)));
    // same degree sequence, non-isomorphic
    CHECK(canonical_key(cycle_graph(6)) !=
          canonical_key(disjoint_union(clique(3), clique(3))));
    Graph prism = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5},
                                 {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(canonical_key(complete_bipartite(3, 3)) != canonical_key(prism));
    CHECK_FALSE(isomorphic(complete_bipartite(3, 3), prism));
}

TEST_CASE("keys are invariant under 100 random relabelings") {
    Rng rng(31);
    std::vector<Graph> curated = {
        path_graph(7),
        star(9),
        friendship_graph(9),
        h_graph(10, 5),
        turan_graph(9, 4),
        complete_bipartite(3, 5),
        disjoint_union(clique(4), cycle_graph(5)),
        near_regular(8, 3),
        Graph(6),
        clique(8),
    };
    for (const Graph& g : curated) {
        CanonicalKey key = canonical_key(g);
        for (int trial = 0; trial < 100; ++trial) {
            auto perm = random_permutation(g.order(), rng);
            CHECK(canonical_key(relabel(g, perm)) == key);
        }
    }
}

TEST_CASE("canonical graph realizes its own key") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(8)), 45, rng);
        Graph canon = canonical_graph(g);
        CHECK(canonical_key(canon) == canonical_key(g));
        CHECK(ep(canon, 2) == ep(g, 2));
        CHECK(graph_from_key(canonical_key(g)) == canon);
    }
}

TEST_CASE("key counts match the known class counts") {
    // 1, 2, 4, 11, 34, 156 isomorphism classes on 1..6 vertices
    const std::uint64_t expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) {
        std::unordered_set<CanonicalKey> keys;
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask)
            keys.insert(canonical_key(graph_from_mask(n, mask)));
        CHECK(keys.size() == expected[n]);
    }
}

TEST_CASE("key edge cases") {
    CHECK(canonical_key(Graph(0)).size() == 1);
    CHECK(canonical_key(Graph(1)).size() == 1);
    CHECK(graph_from_key(canonical_key(Graph(0))) == Graph(0));
    CHECK_THROWS_AS(graph_from_key(""), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_key(std::string("\x03")),
                    std::invalid_argument);
}
