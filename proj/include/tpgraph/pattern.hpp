#pragma once

#include <string>
#include <vector>

#include "tpgraph/graph.hpp"

namespace tpg {

// A forbidden subgraph or family. Shares its text grammar with FamilySpec,
// plus `Cstar` for the family of all even cycles.
struct Pattern {
    enum class Kind {
        Clique,
        Path,
        Cycle,
        EvenCycleFamily,
        CompleteBipartite,
        Matching,
        Star,
        NearStar,
        DoubleStar,
        EvenLinearForest,
        Custom,
    };
    Kind kind = Kind::Clique;
    int a = 0;
    int b = 0;
    std::vector<int> orders;
    Graph custom;

    std::string to_string() const;

    // The single forbidden graph. Throws for EvenCycleFamily.
    Graph single_graph() const;
};

Pattern clique_pattern(int k);
Pattern path_pattern(int k);
Pattern cycle_pattern(int k);
Pattern even_cycle_family_pattern();
Pattern complete_bipartite_pattern(int a, int b);
Pattern matching_pattern(int k);
Pattern star_pattern(int k);
Pattern near_star_pattern(int k);
Pattern double_star_pattern(int k);
Pattern even_linear_forest_pattern(std::vector<int> orders);
Pattern custom_pattern(const Graph& g);

Pattern parse_pattern(const std::string& text);

}  // namespace tpg
