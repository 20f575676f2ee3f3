#include "tpgraph/detectors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tpg {
namespace {

using u64 = std::uint64_t;

struct Embedder {
    const Graph& g;
    const Graph& pat;
    std::vector<int> order;       // pattern vertices in matching order
    std::vector<u64> back_edges;  // earlier pattern neighbors, as order indexes
    std::vector<int> map;         // order index -> host vertex
    u64 used = 0;

    Embedder(const Graph& host, const Graph& pattern) : g(host), pat(pattern) {
        const int m = pat.order();
        u64 chosen = 0;
        for (int i = 0; i < m; ++i) {
            int best = -1;
            bool best_attached = false;
            for (int v = 0; v < m; ++v) {
                if ((chosen >> v) & 1u) continue;
                bool attached = (pat.neighbors(v) & chosen) != 0;
                if (best < 0 || std::pair(attached, pat.degree(v)) >
                                    std::pair(best_attached, pat.degree(best))) {
                    best = v;
                    best_attached = attached;
                }
            }
            chosen |= u64{1} << best;
            order.push_back(best);
        }
        back_edges.assign(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (pat.has_edge(order[i], order[j]))
                    back_edges[i] |= u64{1} << j;
        map.assign(m, -1);
    }

    bool search(int depth) {
        if (depth == pat.order()) return true;
        const int pdeg = pat.degree(order[depth]);
        for (int t = 0; t < g.order(); ++t) {
            if ((used >> t) & 1u) continue;
            if (g.degree(t) < pdeg) continue;
            bool ok = true;
            for (u64 m = back_edges[depth]; m; m &= m - 1) {
                if (!((g.neighbors(t) >> map[std::countr_zero(m)]) & 1u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[depth] = t;
            used |= u64{1} << t;
            if (search(depth + 1)) return true;
            used &= ~(u64{1} << t);
        }
        return false;
    }
};

bool clique_in_mask(const Graph& g, u64 mask, int size) {
    if (size <= 0) return true;
    if (std::popcount(mask) < size) return false;
    for (u64 m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        // only vertices above v: enumerates each clique once
        u64 rest = mask & g.neighbors(v) & ~((u64{2} << v) - 1);
        if (clique_in_mask(g, rest, size - 1)) return true;
    }
    return false;
}

bool path_dfs(const Graph& g, int end, u64 used, int remaining) {
    if (remaining == 0) return true;
    u64 cand = g.neighbors(end) & ~used;
    // not enough vertices reachable from the current end: prune
    if (std::popcount(cand) == 0) return false;
    u64 reach = cand;
    u64 frontier = cand;
    while (frontier && std::popcount(reach) < remaining) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        u64 fresh = g.neighbors(u) & ~used & ~reach;
        reach |= fresh;
        frontier |= fresh;
    }
    if (std::popcount(reach) < remaining) return false;
    for (u64 m = cand; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (path_dfs(g, u, used | (u64{1} << u), remaining - 1)) return true;
    }
    return false;
}

struct BlockScan {
    const Graph& g;
    std::vector<int> depth, low;
    std::vector<std::pair<int, int>> stack;
    bool even_cycle = false;

    explicit BlockScan(const Graph& graph)
        : g(graph), depth(graph.order(), -1), low(graph.order(), 0) {}

    void block_found(std::size_t from) {
        // collect the block's edges and vertices
        int edges = static_cast<int>(stack.size() - from);
        u64 verts = 0;
        for (std::size_t i = from; i < stack.size(); ++i) {
            verts |= u64{1} << stack[i].first;
            verts |= u64{1} << stack[i].second;
        }
        stack.resize(from);
        int nv = std::popcount(verts);
        if (edges <= 1) return;
        // a 2-connected block avoids even cycles only as an odd cycle
        if (edges != nv || nv % 2 == 0) {
            even_cycle = true;
            return;
        }
        for (u64 m = verts; m; m &= m - 1)
            if (std::popcount(g.neighbors(std::countr_zero(m)) & verts) != 2) {
                even_cycle = true;
                return;
            }
    }

    void dfs(int v, int parent, int d) {
        depth[v] = low[v] = d;
        for (u64 m = g.neighbors(v); m && !even_cycle; m &= m - 1) {
            int u = std::countr_zero(m);
            if (u == parent) continue;
            if (depth[u] < 0) {
                std::size_t mark = stack.size();
                stack.emplace_back(v, u);
                dfs(u, v, d + 1);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= depth[v]) block_found(mark);
            } else if (depth[u] < depth[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], depth[u]);
            }
        }
    }
};

int matching_bb(const Graph& g, u64 alive, int best_needed) {
    // strip vertices without alive neighbors
    int v = -1;
    for (u64 m = alive; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (g.neighbors(u) & alive) {
            v = u;
            break;
        }
    }
    if (v < 0) return 0;
    if (best_needed <= 0) return 0;
    int best = matching_bb(g, alive & ~(u64{1} << v), best_needed);  // skip v
    for (u64 m = g.neighbors(v) & alive; m; m &= m - 1) {
        int u = std::countr_zero(m);
        if (best >= best_needed) break;
        int take = 1 + matching_bb(g, alive & ~(u64{1} << v) & ~(u64{1} << u),
                                   best_needed - 1);
        best = std::max(best, take);
    }
    return best;
}

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.order() < 1)
        throw std::invalid_argument("pattern must have at least one vertex");
    if (pattern.order() > g.order()) return false;
    Embedder emb(g, pattern);
    return emb.search(0);
}

bool contains_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    if (k == 1) return g.order() >= 1;
    return clique_in_mask(g, g.vertex_mask(), k);
}

bool contains_path(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("path order must be >= 2");
    if (k > g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (path_dfs(g, v, u64{1} << v, k - 1)) return true;
    return false;
}

bool contains_even_cycle(const Graph& g) {
    BlockScan scan(g);
    for (int v = 0; v < g.order() && !scan.even_cycle; ++v)
        if (scan.depth[v] < 0) scan.dfs(v, -1, 0);
    return scan.even_cycle;
}

bool contains_complete_bipartite(const Graph& g, int a, int b) {
    if (a < 1 || a > b)
        throw std::invalid_argument("complete bipartite check needs 1 <= a <= b");
    if (a + b > g.order()) return false;
    // enumerate a-subsets; their common neighborhood outside the subset must
    // reach size b
    struct Rec {
        const Graph& g;
        int b;
        bool found = false;
        void go(int from, int left, u64 chosen, u64 common) {
            if (left == 0) {
                found = std::popcount(common & ~chosen) >= b;
                return;
            }
            for (int v = from; v + left <= g.order() && !found; ++v) {
                u64 next_chosen = chosen | (u64{1} << v);
                u64 next_common = common & g.neighbors(v);
                if (std::popcount(next_common & ~next_chosen) < b) continue;
                go(v + 1, left - 1, next_chosen, next_common);
            }
        }
    } rec{g, b};
    rec.go(0, a, 0, g.vertex_mask());
    return rec.found;
}

bool clique_in_vertex_set(const Graph& g, std::uint64_t mask, int size) {
    return clique_in_mask(g, mask, size);
}

int max_matching_size(const Graph& g) {
    return matching_bb(g, g.vertex_mask(), g.order() / 2);
}

int max_matching_size(const Graph& g, std::uint64_t alive) {
    return matching_bb(g, alive & g.vertex_mask(), g.order() / 2);
}

bool is_pattern_free(const Graph& g, const Pattern& p) {
    using K = Pattern::Kind;
    switch (p.kind) {
        case K::Clique: return !contains_clique(g, p.a);
        case K::Path: return !contains_path(g, p.a);
        case K::EvenCycleFamily: return !contains_even_cycle(g);
        case K::CompleteBipartite:
            return !contains_complete_bipartite(g, p.a, p.b);
        case K::Matching: return max_matching_size(g) < p.a;
        case K::Star: return g.max_degree() <= p.a - 2;
        case K::Cycle:
        case K::NearStar:
        case K::DoubleStar:
        case K::EvenLinearForest:
        case K::Custom: {
            Graph pg = p.single_graph();
            if (pg.order() > g.order()) return true;
            return !contains_subgraph(g, pg);
        }
    }
    throw std::invalid_argument("unhandled pattern kind");
}

}  // namespace tpg
