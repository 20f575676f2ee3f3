#include "tpgraph/pattern.hpp"

#include <stdexcept>

#include "tpgraph/families.hpp"

namespace tpg {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Pattern clique_pattern(int k) {
    require(k >= 2, "clique pattern needs k >= 2");
    return Pattern{Pattern::Kind::Clique, k};
}

Pattern path_pattern(int k) {
    require(k >= 2, "path pattern needs k >= 2");
    return Pattern{Pattern::Kind::Path, k};
}

Pattern cycle_pattern(int k) {
    require(k >= 3, "cycle pattern needs k >= 3");
    return Pattern{Pattern::Kind::Cycle, k};
}

Pattern even_cycle_family_pattern() {
    return Pattern{Pattern::Kind::EvenCycleFamily};
}

Pattern complete_bipartite_pattern(int a, int b) {
    require(a >= 1 && a <= b, "complete bipartite pattern needs 1 <= a <= b");
    return Pattern{Pattern::Kind::CompleteBipartite, a, b};
}

Pattern matching_pattern(int k) {
    require(k >= 1, "matching pattern needs k >= 1");
    return Pattern{Pattern::Kind::Matching, k};
}

Pattern star_pattern(int k) {
    require(k >= 2, "star pattern needs k >= 2");
    return Pattern{Pattern::Kind::Star, k};
}

Pattern near_star_pattern(int k) {
    require(k >= 4, "near star pattern needs k >= 4");
    return Pattern{Pattern::Kind::NearStar, k};
}

Pattern double_star_pattern(int k) {
    require(k >= 1, "double star pattern needs k >= 1");
    return Pattern{Pattern::Kind::DoubleStar, k};
}

Pattern even_linear_forest_pattern(std::vector<int> orders) {
    require(!orders.empty(), "even linear forest pattern needs components");
    for (int m : orders)
        require(m >= 2 && m % 2 == 0,
                "even linear forest components must have even order >= 2");
    Pattern p{Pattern::Kind::EvenLinearForest};
    p.orders = std::move(orders);
    return p;
}

Pattern custom_pattern(const Graph& g) {
    require(g.edge_count() >= 1, "custom pattern needs at least one edge");
    Pattern p{Pattern::Kind::Custom};
    p.custom = g;
    return p;
}

std::string Pattern::to_string() const {
    using K = Kind;
    switch (kind) {
        case K::Clique: return "K" + std::to_string(a);
        case K::Path: return "P" + std::to_string(a);
        case K::Cycle: return "C" + std::to_string(a);
        case K::EvenCycleFamily: return "Cstar";
        case K::Star: return "S" + std::to_string(a);
        case K::Matching: return "M" + std::to_string(a);
        case K::NearStar: return "Sstar:" + std::to_string(a);
        case K::DoubleStar: return "Dstar:" + std::to_string(a);
        case K::CompleteBipartite:
            return "Kab:" + std::to_string(a) + "," + std::to_string(b);
        case K::EvenLinearForest: {
            std::string out = "forest:";
            for (std::size_t i = 0; i < orders.size(); ++i)
                out += (i ? "," : "") + std::to_string(orders[i]);
            return out;
        }
        case K::Custom: return "g6:" + graph6_encode(custom);
    }
    return "?";
}

Graph Pattern::single_graph() const {
    using K = Kind;
    switch (kind) {
        case K::Clique: return clique(a);
        case K::Path: return path_graph(a);
        case K::Cycle: return cycle_graph(a);
        case K::EvenCycleFamily:
            throw std::invalid_argument(
                "the even-cycle family is not a single graph");
        case K::Star: return star(a);
        case K::Matching: return matching_graph(a);
        case K::NearStar: return near_star(a);
        case K::DoubleStar: return double_star(a);
        case K::CompleteBipartite: return complete_bipartite(a, b);
        case K::EvenLinearForest: return even_linear_forest(orders);
        case K::Custom: return custom;
    }
    throw std::invalid_argument("unhandled pattern kind");
}

Pattern parse_pattern(const std::string& text) {
    if (text == "Cstar") return even_cycle_family_pattern();
    FamilySpec spec = parse_family(text);
    using F = FamilySpec::Kind;
    switch (spec.kind) {
        case F::Path: return path_pattern(spec.a);
        case F::Cycle: return cycle_pattern(spec.a);
        case F::Clique: return clique_pattern(spec.a);
        case F::Star: return star_pattern(spec.a);
        case F::Matching: return matching_pattern(spec.a);
        case F::NearStar: return near_star_pattern(spec.a);
        case F::DoubleStar: return double_star_pattern(spec.a);
        case F::CompleteBipartite:
            return complete_bipartite_pattern(spec.a, spec.b);
        case F::EvenLinearForest:
            return even_linear_forest_pattern(spec.orders);
        case F::Custom: return custom_pattern(spec.base);
        default:
            throw std::invalid_argument("'" + text + "' is not a pattern");
    }
}

}  // namespace tpg
