#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "tpgraph/families.hpp"
#include "tpgraph/graph.hpp"

using namespace tpg;
using namespace tpg::testing;

TEST_CASE("ep examples") {
    CHECK(ep(friendship_graph(7), 2) == 60);
    CHECK(ep(cycle_graph(5), 1) == 10);
    CHECK(ep(Graph(5), 3) == 0);
    CHECK(ep(clique(4), 3) == 108);
    CHECK(ep(Graph(0), 2) == 0);
    CHECK_THROWS_AS(ep(clique(3), 0), std::invalid_argument);
}

TEST_CASE("ep(G,1) is twice the edge count") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(12)), 40, rng);
        CHECK(ep(g, 1) == 2 * g.edge_count());
    }
}

TEST_CASE("ep is isomorphism invariant") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(8, 50, rng);
        auto perm = random_permutation(8, rng);
        for (unsigned p = 1; p <= 3; ++p)
            CHECK(ep(g, p) == ep(relabel(g, perm), p));
    }
}

TEST_CASE("adding any missing edge strictly increases ep") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(7, 40, rng);
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                for (unsigned p = 1; p <= 3; ++p) CHECK(ep(h, p) > ep(g, p));
            }
    }
}

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(complete_bipartite(2, 3)).values ==
          std::vector<int>{3, 3, 2, 2, 2});
    CHECK(degree_sequence(h_graph(12, 5)).values ==
          std::vector<int>{11, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(degree_sequence(friendship_graph(5)).values ==
          std::vector<int>{4, 2, 2, 2, 2});
    CHECK(DegreeSequence({1, 3, 2}).values == std::vector<int>{3, 2, 1});
}

TEST_CASE("graph6 hand-encoded values") {
    CHECK(graph6_encode(clique(3)) == "Bw");
    Graph edge(2);
    edge.add_edge(0, 1);
    CHECK(graph6_encode(edge) == "A_");
    CHECK(graph6_encode(Graph(2)) == "A?");
    CHECK(graph6_decode("Bw") == clique(3));
    CHECK(graph6_decode("A?") == Graph(2));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);  // length
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B\x01w"), std::invalid_argument);  // range
    CHECK_THROWS_AS(graph6_encode(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 round trip is the labeled identity") {
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 7 + static_cast<int>(rng.below(56));  // up to 62
        Graph g = random_graph(n, 30, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("erdos-gallai examples") {
    CHECK(is_graphic(DegreeSequence({3, 3, 3, 3})));
    CHECK(is_graphic(DegreeSequence({5, 2, 2, 2, 2, 1})));
    CHECK_FALSE(is_graphic(DegreeSequence({3, 3, 1, 1})));
    CHECK(is_graphic(DegreeSequence({})));
    CHECK_FALSE(is_graphic(DegreeSequence({1})));
}

TEST_CASE("erdos-gallai agrees with exhaustive realization search") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> realizable;
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask)
            realizable.insert(
                degree_sequence(graph_from_mask(n, mask)).values);
        // walk all nonincreasing candidate sequences with entries <= n-1
        std::vector<int> seq(n);
        auto rec = [&](auto&& self, int i, int cap) -> void {
            if (i == n) {
                DegreeSequence ds(seq);
                CHECK(is_graphic(ds) == realizable.count(ds.values));
                return;
            }
            for (int d = cap; d >= 0; --d) {
                seq[i] = d;
                self(self, i + 1, d);
            }
        };
        rec(rec, 0, n - 1);
    }
}

TEST_CASE("havel-hakimi realization") {
    CHECK(degree_sequence(realize_sequence(DegreeSequence({2, 2, 2}))).values ==
          std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(realize_sequence(DegreeSequence({3, 3, 1, 1})),
                    std::invalid_argument);
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.below(10));
        Graph g = random_graph(n, static_cast<int>(rng.below(100)), rng);
        DegreeSequence target = degree_sequence(g);
        CHECK(degree_sequence(realize_sequence(target)) == target);
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(clique(3), clique(2));
    CHECK(degree_sequence(u).values == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(disjoint_union(clique(3), Graph(0)) == clique(3));
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(ep(u, p) == ep(clique(3), p) + ep(clique(2), p));
    Graph k4x3 =
        disjoint_union(disjoint_union(clique(4), clique(4)), clique(4));
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(ep(k4x3, p) == BigInt(12) * ipow(3, p));
    CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(40)),
                    std::invalid_argument);
}

TEST_CASE("graph invariants are enforced") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    g.add_edge(0, 2);
    CHECK(g.has_edge(2, 0));
    g.add_edge(2, 0);  // idempotent, no multi-edges
    CHECK(g.edge_count() == 1);
}

TEST_CASE("ipow and binomial") {
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(63, 11).str() == "62050608388552823487");
    CHECK(ipow(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 3) == 4);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32).str() == "1832624140942590534");
}
