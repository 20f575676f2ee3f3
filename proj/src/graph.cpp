#include "tpgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tpg {

BigInt ipow(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0.." +
                                    std::to_string(kMaxVertices));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(adj_[v]));
    return best;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return make_graph(n, std::vector<std::pair<int, int>>(edge_list));
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

DegreeSequence::DegreeSequence(std::vector<int> v) : values(std::move(v)) {
    for (int d : values)
        if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
    std::sort(values.begin(), values.end(), std::greater<int>());
}

PowerSum ep(const Graph& g, unsigned p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    PowerSum total = 0;
    for (int v = 0; v < g.order(); ++v) total += ipow(g.degree(v), p);
    return total;
}

PowerSum ep(const DegreeSequence& seq, unsigned p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    PowerSum total = 0;
    for (int d : seq.values) total += ipow(d, p);
    return total;
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> degs(g.order());
    for (int v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    return DegreeSequence(std::move(degs));
}

bool is_graphic(const DegreeSequence& seq) {
    const auto& d = seq.values;
    const int n = seq.size();
    if (n == 0) return true;
    if (d.front() >= n) return false;
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    // Erdos-Gallai: for each k, sum of the k largest degrees is at most
    // k(k-1) + sum_{i>k} min(d_i, k).
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

Graph realize_sequence(const DegreeSequence& seq) {
    if (!is_graphic(seq))
        throw std::invalid_argument("degree sequence is not graphic");
    const int n = seq.size();
    Graph g(n);
    // Havel-Hakimi: repeatedly satisfy the vertex with the largest residual
    // degree by connecting it to the next-largest ones.
    std::vector<std::pair<int, int>> residual(n);  // (remaining degree, vertex)
    for (int v = 0; v < n; ++v) residual[v] = {seq.values[v], v};
    for (int round = 0; round < n; ++round) {
        std::sort(residual.begin(), residual.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first
                                                : a.second < b.second;
                  });
        auto [need, v] = residual[0];
        if (need == 0) break;
        if (need >= n) throw std::logic_error("havel-hakimi overflow");
        residual[0].first = 0;
        for (int i = 1; i <= need; ++i) {
            g.add_edge(v, residual[i].second);
            if (--residual[i].first < 0)
                throw std::logic_error("havel-hakimi underflow");
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument(
            "graph6 single-byte header supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits = 0;
    int acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");
    const int n = text[0] - 63;
    if (n > 62) throw std::invalid_argument("graph6: unsupported size header");
    const int nbits = n * (n - 1) / 2;
    const std::size_t expect = 1 + (nbits + 5) / 6;
    if (text.size() != expect)
        throw std::invalid_argument("graph6: malformed length");
    Graph g(n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds the vertex cap");
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) keep.push_back(v);
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph add_vertex(const Graph& g, std::uint64_t neighbor_mask) {
    if (g.order() + 1 > kMaxVertices)
        throw std::invalid_argument("vertex cap exceeded");
    if (neighbor_mask & ~g.vertex_mask())
        throw std::invalid_argument("neighbor mask out of range");
    Graph out(g.order() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v)
        if ((neighbor_mask >> v) & 1u) out.add_edge(g.order(), v);
    return out;
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("vertex out of range");
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t{1} << v));
}

std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = g.neighbors(u) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

}  // namespace tpg
