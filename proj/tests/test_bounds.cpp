#include <doctest.h>

#include "oracle.hpp"
#include "tpgraph/bounds.hpp"
#include "tpgraph/canonical.hpp"
#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

using namespace tpg;
using namespace tpg::testing;

TEST_CASE("path turan numbers") {
    CHECK(turan_path_number(10, 4) == 9);
    CHECK(turan_path_number(7, 5) == 9);
    CHECK(turan_path_number(4, 5) == 6);
    CHECK(turan_path_number(0, 4) == 0);
}

TEST_CASE("capped power sum maximum") {
    CHECK(power_sum_max({5, 10, 4, 2}) == 36);
    CHECK(power_sum_max({3, 100, 2, 2}) == 12);
    CHECK(power_sum_max({4, 7, 7, 2}) == 49);
    CHECK(power_sum_max({4, 7, 0, 2}) == 0);
    CHECK(power_sum_max({0, 7, 3, 2}) == 0);
}

TEST_CASE("capped power sum matches brute force") {
    for (int n = 0; n <= 4; ++n)
        for (long long S = 0; S <= 8; ++S)
            for (long long D = 0; D <= 5; ++D)
                for (unsigned p : {2u, 3u}) {
                    BigInt brute = 0;
                    std::vector<long long> xs(n, 0);
                    auto rec = [&](auto&& self, int i, long long left,
                                   long long cap) -> void {
                        if (i == n) {
                            BigInt v = 0;
                            for (long long x : xs) v += ipow(x, p);
                            if (v > brute) brute = v;
                            return;
                        }
                        for (long long x = std::min(cap, left); x >= 0; --x) {
                            xs[i] = x;
                            self(self, i + 1, left - x, x);
                        }
                    };
                    rec(rec, 0, std::min(S, D * n), D);
                    CHECK(power_sum_max({n, S, D, p}) == brute);
                }
}

TEST_CASE("pigeonhole certificates") {
    auto k5 = pigeonhole_check(clique(5), 2, 3);
    CHECK(k5.lhs == 20);
    CHECK(k5.rhs == 10);
    CHECK(k5.certifies_containment);
    CHECK(contains_complete_bipartite(clique(5), 2, 3));

    auto s6 = pigeonhole_check(star(6), 2, 2);
    CHECK(s6.lhs == 10);
    CHECK(s6.rhs == 15);
    CHECK_FALSE(s6.certifies_containment);

    auto empty = pigeonhole_check(Graph(5), 3, 2);
    CHECK(empty.lhs == 0);
    CHECK_FALSE(empty.certifies_containment);
}

TEST_CASE("pigeonhole certificates are sound on small graphs") {
    for (int n = 1; n <= 6; ++n) {
        auto classes = brute_force_classes(n, [](const Graph&) { return true; });
        for (const Graph& g : classes)
            for (auto [a, k] :
                 std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
                if (pigeonhole_check(g, a, k).certifies_containment)
                    CHECK(contains_complete_bipartite(g, a, k));
    }
}

namespace {

bool is_complete_multipartite(const Graph& g, int max_classes) {
    // group each vertex with its non-neighbors, then demand exactly the
    // cross edges
    std::vector<std::uint64_t> classes;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t cls = ~g.neighbors(v) & g.vertex_mask() & ~seen;
        classes.push_back(cls);
        seen |= cls;
    }
    if (static_cast<int>(classes.size()) > max_classes) return false;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            for (std::uint64_t mu = classes[i]; mu; mu &= mu - 1)
                for (std::uint64_t mv = classes[j]; mv; mv &= mv - 1) {
                    int u = std::countr_zero(mu);
                    int v = std::countr_zero(mv);
                    if (u == v) continue;
                    if (g.has_edge(u, v) != (i != j)) return false;
                }
    return true;
}

}  // namespace

TEST_CASE("erdos envelope examples") {
    Graph env = erdos_envelope(cycle_graph(5), 3);
    CHECK(isomorphic(env, complete_bipartite(2, 3)));
    for (int v = 0; v < 5; ++v)
        CHECK(env.degree(v) >= cycle_graph(5).degree(v));

    Graph kb = complete_bipartite(2, 3);
    CHECK(erdos_envelope(kb, 3) == kb);

    Graph empty4 = erdos_envelope(Graph(4), 3);
    CHECK(empty4 == Graph(4));

    CHECK_THROWS_AS(erdos_envelope(clique(3), 3), std::invalid_argument);
}

TEST_CASE("erdos envelope dominates on small clique-free graphs") {
    for (auto [k, n_max] : std::vector<std::pair<int, int>>{{3, 6}, {4, 6}}) {
        for (int n = 1; n <= n_max; ++n) {
            auto classes = brute_force_classes(
                n, [k = k](const Graph& g) { return !contains_clique(g, k); });
            for (const Graph& g : classes) {
                Graph env = erdos_envelope(g, k);
                CHECK(is_complete_multipartite(env, k - 1));
                CHECK_FALSE(contains_clique(env, k));
                for (int v = 0; v < g.order(); ++v)
                    CHECK(env.degree(v) >= g.degree(v));
                for (unsigned p = 1; p <= 3; ++p)
                    CHECK(ep(g, p) <= ep(env, p));
            }
        }
    }
}

TEST_CASE("predictions") {
    auto s4 = predicted_tp(star_pattern(4), 8, 2);
    CHECK(s4.kind == Prediction::Kind::Exact);
    CHECK(s4.value == 32);
    CHECK(s4.caveat.empty());

    auto ns5 = predicted_tp(near_star_pattern(5), 11, 2);
    CHECK(ns5.value == 110);

    auto cstar = predicted_tp(even_cycle_family_pattern(), 9, 2);
    CHECK(cstar.kind == Prediction::Kind::Exact);
    CHECK(cstar.value == 96);
    CHECK(cstar.caveat == "n sufficiently large");

    auto p5 = predicted_tp(path_pattern(5), 4, 3);
    CHECK(p5.kind == Prediction::Kind::Exact);
    CHECK(p5.value == 108);
    CHECK(p5.caveat.empty());

    auto k23 = predicted_tp(complete_bipartite_pattern(2, 3), 100, 3);
    CHECK(k23.kind == Prediction::Kind::AsymptoticLeadingTerm);
    CHECK(k23.coefficient == 1);
    CHECK(k23.exponent == 3);

    auto dstar = predicted_tp(double_star_pattern(3), 50, 2);
    CHECK(dstar.kind == Prediction::Kind::AsymptoticLeadingTerm);
    CHECK(dstar.coefficient == 2);

    CHECK(predicted_tp(path_pattern(2), 9, 2).value == 0);
    CHECK(predicted_tp(path_pattern(3), 10, 2).value == 10);
    CHECK(predicted_tp(path_pattern(3), 9, 2).value == 8);
    CHECK(predicted_tp(clique_pattern(3), 10, 2).value == 250);

    CHECK_THROWS_AS(predicted_tp(cycle_pattern(5), 10, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(predicted_tp(near_star_pattern(5), 10, 2),
                    std::invalid_argument);  // n <= 2k not covered
    CHECK_THROWS_AS(predicted_tp(clique_pattern(3), 10, 4),
                    std::invalid_argument);  // balanced optimum only for p<=3
}
