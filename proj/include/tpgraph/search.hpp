#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tpgraph/canonical.hpp"
#include "tpgraph/graph.hpp"
#include "tpgraph/pattern.hpp"

namespace tpg {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    int jobs = 1;
    // enumeration refuses orders above this; raise explicitly to go further
    int max_order = 12;
    std::uint64_t max_classes = 80'000'000;
};

struct SearchResult {
    PowerSum value;
    std::vector<CanonicalKey> witnesses;  // all extremal classes, key-sorted
    bool exhaustive = false;
    std::uint64_t enumerated = 0;
    double elapsed_seconds = 0.0;
};

// Isomorph-free exhaustive generation: grows graphs vertex by vertex,
// prunes extensions that create the pattern (freeness is hereditary, so
// this is complete), and deduplicates each level by canonical key. Calls
// `sink` once per isomorphism class of pattern-free graphs on n vertices
// with a canonical representative; returns the class count.
std::uint64_t enumerate_pattern_free(
    int n, const Pattern& pattern, const SearchOptions& opt,
    const std::function<void(const Graph&)>& sink);

SearchResult exhaustive_tp(int n, const Pattern& pattern, unsigned p,
                           const SearchOptions& opt = {});

// One enumeration shared across several exponents.
std::vector<SearchResult> exhaustive_tp_multi(int n, const Pattern& pattern,
                                              const std::vector<unsigned>& ps,
                                              const SearchOptions& opt = {});

// Exact t_p(n, K_k) by maximizing sum s_i (n - s_i)^p over all partitions of
// n into at most k-1 positive parts.
struct MultipartiteResult {
    SearchResult result;
    std::vector<std::vector<int>> partitions;  // all optimal part lists
};

MultipartiteResult multipartite_tp(int n, int k, unsigned p);

struct LocalSearchConfig {
    std::uint64_t seed = 1;
    int restarts = 32;
    int step_budget = 5000;
    bool allow_add = true;
    bool allow_delete = true;
    bool allow_rewire = true;
};

// Hill climbing over pattern-preserving edge edits, strict improvements
// only, deterministic under (config, seed). The result is a valid lower
// bound; the witness is re-verified pattern-free.
SearchResult local_search_tp(int n, const Pattern& pattern, unsigned p,
                             const LocalSearchConfig& cfg = {});

// Best construction-backed pattern-free graph on n vertices, when one of
// the named families applies. Used to warm-start the local search.
bool best_known_witness(int n, const Pattern& pattern, unsigned p, Graph& out);

}  // namespace tpg
