#pragma once

#include "tpgraph/graph.hpp"
#include "tpgraph/pattern.hpp"

namespace tpg {

// Generic backtracking embedding search (subgraph, not induced). Pattern
// vertices are matched in an order preferring attachment to the already
// matched part, then larger degree.
bool contains_subgraph(const Graph& g, const Graph& pattern);

bool contains_clique(const Graph& g, int k);

// True iff g has a simple path on k vertices.
bool contains_path(const Graph& g, int k);

// Block decomposition: a graph is even-cycle-free iff every 2-connected
// block is a single edge or an odd cycle.
bool contains_even_cycle(const Graph& g);

// True iff some a-set of vertices has at least b common neighbors outside
// itself (requires 1 <= a <= b).
bool contains_complete_bipartite(const Graph& g, int a, int b);

int max_matching_size(const Graph& g);

// Restrictions of the above to a vertex subset, used by the search layer's
// incremental extension checks.
bool clique_in_vertex_set(const Graph& g, std::uint64_t mask, int size);
int max_matching_size(const Graph& g, std::uint64_t alive);

// Dispatches to the specialized detector for the pattern; falls back to the
// generic embedding search. Result matches generic-oracle semantics.
bool is_pattern_free(const Graph& g, const Pattern& p);

}  // namespace tpg
