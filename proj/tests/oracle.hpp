#pragma once

// Test-only brute-force helpers, independent of the level-wise generator in
// the library: everything here walks the full labeled space.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "tpgraph/canonical.hpp"
#include "tpgraph/graph.hpp"

namespace tpg::testing {

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(u, v);
    return g;
}

inline std::uint64_t labeled_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// one representative per isomorphism class among labeled graphs passing
// `keep`
template <typename Keep>
std::vector<Graph> brute_force_classes(int n, Keep keep) {
    std::unordered_set<CanonicalKey> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!keep(g)) continue;
        if (seen.insert(canonical_key(g)).second) out.push_back(g);
    }
    return out;
}

// deterministic rng for property tests
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

inline Graph random_graph(int n, int percent_edges, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(percent_edges))
                g.add_edge(u, v);
    return g;
}

}  // namespace tpg::testing
