#pragma once

#include <string>
#include <vector>

#include "tpgraph/search.hpp"

namespace tpg {

struct Claim {
    std::string id;        // claim tag, e.g. "theorem-1.1/K3"
    std::string params;    // instance, e.g. "n=5 p=2"
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<Claim> claims;
    bool pass = false;
    double elapsed_seconds = 0.0;
};

// Known ids: theorem-1.1, theorem-1.2, theorem-1.3, lemma-p5, props-4,
// prop-2.2, prop-5.2, identities, detectors, all.
std::vector<std::string> suite_names();
SuiteReport run_verification_suite(const std::string& name,
                                   const SearchOptions& opt = {});

// Data-gathering probes: tables, no conclusions.
struct ProbeTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// problem-6.3: rows (n, t_p(n,C4), e_p(F_n), equal) — exhaustive search
// against the friendship-graph value.
// conjecture-6.4: rows (n, t_p(n,C_2k), exhaustive, (k-1)n^p).
ProbeTable probe_conjecture(const std::string& name, int n_min, int n_max,
                            unsigned p = 2, int k = 3,
                            const SearchOptions& opt = {});

}  // namespace tpg
