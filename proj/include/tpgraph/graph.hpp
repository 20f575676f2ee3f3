#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tpg {

using BigInt = boost::multiprecision::cpp_int;

// Degree power sums are kept exact: (n-1)^p overflows 64 bits already for
// moderate (n,p), and every check downstream is an integer equality.
using PowerSum = BigInt;

inline constexpr int kMaxVertices = 64;

BigInt ipow(BigInt base, unsigned exp);
BigInt binomial(unsigned n, unsigned k);

// Simple undirected graph on vertices 0..n-1. One 64-bit adjacency row per
// vertex; no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    std::uint64_t vertex_mask() const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Nonincreasing multiset of degrees. Accepts unsorted input and normalizes;
// all formulas downstream treat sequences as multisets.
struct DegreeSequence {
    std::vector<int> values;

    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> v);

    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const DegreeSequence&) const = default;
};

PowerSum ep(const Graph& g, unsigned p);
PowerSum ep(const DegreeSequence& seq, unsigned p);
DegreeSequence degree_sequence(const Graph& g);

// Erdos-Gallai test: true iff some simple graph realizes the sequence.
bool is_graphic(const DegreeSequence& seq);

// Havel-Hakimi realization. Throws std::invalid_argument on non-graphic
// input.
Graph realize_sequence(const DegreeSequence& seq);

// graph6 text format, single-byte size header (n <= 62). Encoding is
// bit-exact: size byte 63+n, then the upper triangle in column order packed
// into 6-bit groups, each +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

Graph disjoint_union(const Graph& g, const Graph& h);

// perm[v] = new label of v.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Keeps the vertices in `mask`, relabeled by increasing original index.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

// Appends vertex n adjacent to `neighbor_mask`.
Graph add_vertex(const Graph& g, std::uint64_t neighbor_mask);
Graph remove_vertex(const Graph& g, int v);

// Masks of the connected components, sorted by lowest member.
std::vector<std::uint64_t> components(const Graph& g);

}  // namespace tpg
