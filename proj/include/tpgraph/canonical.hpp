#pragma once

#include <string>
#include <vector>

#include "tpgraph/graph.hpp"

namespace tpg {

// Canonical byte string identifying an isomorphism class: one byte for the
// order, then the upper triangle of the canonically relabeled adjacency
// matrix packed in column order. Equal keys iff isomorphic.
using CanonicalKey = std::string;

struct CanonicalForm {
    CanonicalKey key;
    std::vector<int> order;  // order[i] = original vertex at canonical slot i
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
Graph canonical_graph(const Graph& g);
Graph graph_from_key(const CanonicalKey& key);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace tpg
