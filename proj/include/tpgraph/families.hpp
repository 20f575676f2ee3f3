#pragma once

#include <string>
#include <vector>

#include "tpgraph/graph.hpp"

namespace tpg {

// Class sizes of a complete multipartite graph.
struct PartitionSpec {
    std::vector<int> parts;
};

Graph complete_multipartite(const PartitionSpec& spec);

// Complete (k-1)-partite graph on n vertices with class sizes as equal as
// possible; the unique K_k-free edge maximizer.
Graph turan_graph(int n, int k);

// Clique B of size floor(k/2)-1 joined completely to A; A independent for
// even k, one edge inside A for odd k. Valid for n >= k >= 4, plus every
// n >= 1 when k == 5 (the small cases degrade to stars).
Graph h_graph(int n, int k);

// Star on n vertices plus a maximum matching on its leaves. Defined for all
// n >= 1; even n leaves one unmatched leaf.
Graph friendship_graph(int n);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph clique(int k);
Graph star(int k);                       // k vertices: center plus k-1 leaves
Graph near_star(int k);                  // S_{k-1} plus a pendant on a leaf
Graph double_star(int k);                // two S_k with the roots joined
Graph matching_graph(int k);             // k disjoint edges, no padding
Graph complete_bipartite(int a, int b);
Graph even_linear_forest(const std::vector<int>& orders);

// d-regular graph on n vertices when nd is even, otherwise one vertex of
// degree d-1 and the rest of degree d. Realized by Havel-Hakimi.
Graph near_regular(int n, int d);

// base plus one new vertex of degree one attached to vertex 0.
Graph pendant_extension(const Graph& base);

// Text grammar shared with the CLI: Kk, Pk, Ck, Sk, Mk, Sstar:k, Dstar:k,
// Kab:a,b, forest:a,b,..., g6:<string>. `Cstar` names the even-cycle family
// and is rejected here (it is a pattern, not a single graph).
struct FamilySpec {
    enum class Kind {
        Path,
        Cycle,
        Clique,
        Star,
        NearStar,
        DoubleStar,
        Matching,
        CompleteBipartite,
        EvenLinearForest,
        NearRegular,
        PendantExtension,
        Custom,
    };
    Kind kind;
    int a = 0;
    int b = 0;
    std::vector<int> orders;
    Graph base;

    std::string to_string() const;
};

FamilySpec parse_family(const std::string& text);
Graph build_family(const FamilySpec& spec);

}  // namespace tpg
