#include "tpgraph/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace tpg {
namespace {

using u64 = std::uint64_t;

// Equitable refinement of the degree partition. Cells are kept in a
// deterministic order that depends only on isomorphism invariants: the
// initial cells are sorted by decreasing degree, and a split replaces a cell
// in place by its sub-cells sorted by decreasing neighbor count against the
// splitter. Isomorphic graphs therefore produce matching cell sequences.
std::vector<u64> refine_cells(const Graph& g) {
    const int n = g.order();
    std::vector<u64> cells;
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    for (int i = 0; i < n;) {
        int j = i;
        u64 cell = 0;
        while (j < n && g.degree(by_degree[j]) == g.degree(by_degree[i]))
            cell |= u64{1} << by_degree[j++];
        cells.push_back(cell);
        i = j;
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const u64 splitter = cells[s];
            for (std::size_t t = 0; t < cells.size(); ++t) {
                if (std::popcount(cells[t]) <= 1) continue;
                // bucket the cell by neighbor count into the splitter
                std::vector<std::pair<int, int>> counted;  // (count, vertex)
                for (u64 m = cells[t]; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    counted.emplace_back(std::popcount(g.neighbors(v) & splitter), v);
                }
                std::stable_sort(counted.begin(), counted.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.first > b.first;
                                 });
                if (counted.front().first == counted.back().first) continue;
                std::vector<u64> sub;
                for (std::size_t i = 0; i < counted.size();) {
                    std::size_t j = i;
                    u64 cell = 0;
                    while (j < counted.size() &&
                           counted[j].first == counted[i].first)
                        cell |= u64{1} << counted[j++].second;
                    sub.push_back(cell);
                    i = j;
                }
                cells.erase(cells.begin() + static_cast<long>(t));
                cells.insert(cells.begin() + static_cast<long>(t), sub.begin(),
                             sub.end());
                changed = true;
                break;
            }
        }
    }
    return cells;
}

// Twin classes via union-find: u,v are twins when swapping them is an
// automorphism, i.e. N(u)\{v} == N(v)\{u}. Closure under chaining keeps the
// transposition property.
struct TwinClasses {
    std::vector<int> parent;
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    explicit TwinClasses(const Graph& g) : parent(g.order()) {
        std::iota(parent.begin(), parent.end(), 0);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                u64 nu = g.neighbors(u) & ~(u64{1} << v);
                u64 nv = g.neighbors(v) & ~(u64{1} << u);
                if (nu == nv) parent[find(u)] = find(v);
            }
    }
};

// Backtracking maximization of the packed upper-triangle bit string over all
// cell-respecting vertex orders. Maximization (rather than minimization)
// front-loads edges, which forces decisions early in the sparse graphs the
// search produces. The `best` array always matches the bits of the current
// partial order up to `best_len`, so a strictly smaller chunk prunes the
// whole branch and a strictly larger one rewrites the tail of `best`.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> pos_cell;       // position -> index of its cell
    std::vector<u64> cells;
    std::vector<int> twin_class;
    std::vector<std::uint8_t> best;  // one entry per upper-triangle bit
    int best_len = 0;
    std::vector<int> placed;
    std::vector<int> best_order;
    u64 placed_mask = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        cells = refine_cells(g);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int i = 0; i < std::popcount(cells[c]); ++i)
                pos_cell.push_back(static_cast<int>(c));
        TwinClasses twins(g);
        twin_class.resize(n);
        for (int v = 0; v < n; ++v) twin_class[v] = twins.find(v);
        best.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        placed.reserve(n);
        best_order.assign(n, 0);
    }

    u64 chunk_of(int v) const {
        u64 chunk = 0;
        for (int j = 0; j < static_cast<int>(placed.size()); ++j)
            chunk = (chunk << 1) | ((g.neighbors(v) >> placed[j]) & 1u);
        return chunk;
    }

    void run() {
        if (n > 0) descend();
    }

    void descend() {
        const int i = static_cast<int>(placed.size());
        if (i == n) {
            best_order = placed;
            return;
        }
        const int offset = i * (i - 1) / 2;
        u64 candidates = cells[pos_cell[i]] & ~placed_mask;

        std::vector<std::pair<u64, int>> ranked;  // (chunk, vertex)
        std::vector<int> seen_twins;
        for (u64 m = candidates; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (std::find(seen_twins.begin(), seen_twins.end(),
                          twin_class[v]) != seen_twins.end())
                continue;
            seen_twins.push_back(twin_class[v]);
            ranked.emplace_back(chunk_of(v), v);
        }
        std::sort(ranked.begin(), ranked.end(), std::greater<>());

        for (auto [chunk, v] : ranked) {
            int cmp = compare_chunk(chunk, offset, i);
            if (cmp < 0) break;  // ranked descending: the rest only get worse
            if (cmp > 0) write_chunk(chunk, offset, i);
            placed.push_back(v);
            placed_mask |= u64{1} << v;
            descend();
            placed_mask &= ~(u64{1} << v);
            placed.pop_back();
        }
    }

    // -1: chunk below best, 0: equal, 1: above (or extends past best_len)
    int compare_chunk(u64 chunk, int offset, int len) const {
        for (int b = 0; b < len; ++b) {
            int bit = static_cast<int>((chunk >> (len - 1 - b)) & 1u);
            if (offset + b >= best_len) return 1;
            if (bit != best[offset + b]) return bit > best[offset + b] ? 1 : -1;
        }
        return 0;
    }

    void write_chunk(u64 chunk, int offset, int len) {
        for (int b = 0; b < len; ++b)
            best[offset + b] =
                static_cast<std::uint8_t>((chunk >> (len - 1 - b)) & 1u);
        best_len = offset + len;
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run();
    const int n = g.order();
    CanonicalKey key;
    key.push_back(static_cast<char>(n));
    int nbits = n * (n - 1) / 2;
    for (int base = 0; base < nbits; base += 8) {
        int byte = 0;
        for (int b = 0; b < 8 && base + b < nbits; ++b)
            byte |= search.best[base + b] << (7 - b);
        key.push_back(static_cast<char>(byte));
    }
    return CanonicalForm{std::move(key), std::move(search.best_order)};
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

Graph canonical_graph(const Graph& g) {
    CanonicalForm form = canonical_form(g);
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(form.order[i], form.order[j])) out.add_edge(i, j);
    return out;
}

Graph graph_from_key(const CanonicalKey& key) {
    if (key.empty()) throw std::invalid_argument("empty canonical key");
    const int n = static_cast<unsigned char>(key[0]);
    if (n > kMaxVertices) throw std::invalid_argument("bad canonical key");
    const int nbits = n * (n - 1) / 2;
    if (static_cast<int>(key.size()) != 1 + (nbits + 7) / 8)
        throw std::invalid_argument("bad canonical key length");
    Graph g(n);
    int bit = 0;
    // column order matches the packing in canonical_form
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((static_cast<unsigned char>(key[1 + bit / 8]) >> (7 - bit % 8)) & 1u)
                g.add_edge(row, col);
    return g;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_key(g) == canonical_key(h);
}

}  // namespace tpg
