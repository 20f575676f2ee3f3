#pragma once

#include <string>

#include "tpgraph/graph.hpp"
#include "tpgraph/pattern.hpp"

namespace tpg {

// Turan number for paths: r*C(k-1,2) + C(s,2) with r = floor(n/(k-1)),
// s = n mod (k-1).
BigInt turan_path_number(int n, int k);

// Exact maximum of sum x_i^p over n nonnegative integers with sum <= S and
// each term <= D.
struct PowerSumConstraint {
    int n = 0;
    long long total_cap = 0;  // S
    long long term_cap = 0;   // D
    unsigned p = 1;
};

PowerSum power_sum_max(const PowerSumConstraint& c);

// Counting certificate: lhs = sum_i C(d_i, k), rhs = (a-1) * C(n, k).
// lhs > rhs forces a K_{a,k} by pigeonhole.
struct PigeonholeResult {
    BigInt lhs;
    BigInt rhs;
    bool certifies_containment = false;
};

PigeonholeResult pigeonhole_check(const Graph& g, int a, int k);

// Complete multipartite graph on the same vertex set with at most k-1
// classes whose degrees pointwise dominate those of the K_k-free input.
Graph erdos_envelope(const Graph& g, int k);

struct Prediction {
    enum class Kind { Exact, LowerBound, AsymptoticLeadingTerm };
    Kind kind = Kind::Exact;
    BigInt value;        // Exact / LowerBound
    BigInt coefficient;  // AsymptoticLeadingTerm: coefficient * n^exponent
    unsigned exponent = 0;
    std::string source;  // claim tag
    std::string caveat;  // empty, or e.g. "n sufficiently large"
};

// The closed-form claim for t_p(n, pattern) where one is known; throws
// std::invalid_argument when no result covers the pattern.
Prediction predicted_tp(const Pattern& pattern, int n, unsigned p);

}  // namespace tpg
