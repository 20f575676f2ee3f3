#include "tpgraph/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tpg {

Graph complete_multipartite(const PartitionSpec& spec) {
    if (spec.parts.empty())
        throw std::invalid_argument("multipartite spec needs at least one part");
    for (int s : spec.parts)
        if (s < 1) throw std::invalid_argument("class sizes must be positive");
    int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
    if (n > kMaxVertices)
        throw std::invalid_argument("multipartite spec exceeds the vertex cap");
    Graph g(n);
    std::vector<int> cls;
    for (std::size_t c = 0; c < spec.parts.size(); ++c)
        cls.insert(cls.end(), spec.parts[c], static_cast<int>(c));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) g.add_edge(u, v);
    return g;
}

Graph turan_graph(int n, int k) {
    if (n < 1) throw std::invalid_argument("turan graph needs n >= 1");
    if (k < 2) throw std::invalid_argument("turan graph needs k >= 2");
    int classes = k - 1;
    int q = n / classes;
    int r = n % classes;
    PartitionSpec spec;
    for (int c = 0; c < classes; ++c) {
        int size = q + (c < r ? 1 : 0);
        if (size > 0) spec.parts.push_back(size);
    }
    return complete_multipartite(spec);
}

Graph h_graph(int n, int k) {
    if (k < 4) throw std::invalid_argument("h_graph needs k >= 4");
    if (n < k && !(k == 5 && n >= 1))
        throw std::invalid_argument("h_graph needs n >= k (or k == 5, n >= 1)");
    int b = std::min(k / 2 - 1, n);
    Graph g(n);
    for (int u = 0; u < b; ++u)
        for (int v = u + 1; v < b; ++v) g.add_edge(u, v);
    for (int u = 0; u < b; ++u)
        for (int v = b; v < n; ++v) g.add_edge(u, v);
    if (k % 2 == 1 && n - b >= 2) g.add_edge(b, b + 1);
    return g;
}

Graph friendship_graph(int n) {
    if (n < 1) throw std::invalid_argument("friendship graph needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    for (int v = 1; v + 1 < n; v += 2) g.add_edge(v, v + 1);
    return g;
}

Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path needs k >= 1");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    Graph g = path_graph(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph clique(int k) {
    if (k < 1) throw std::invalid_argument("clique needs k >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs k >= 1");
    Graph g(k);
    for (int v = 1; v < k; ++v) g.add_edge(0, v);
    return g;
}

Graph near_star(int k) {
    if (k < 4) throw std::invalid_argument("near star needs k >= 4");
    Graph g = star(k - 1);
    g = add_vertex(g, std::uint64_t{1} << 1);
    return g;
}

Graph double_star(int k) {
    if (k < 1) throw std::invalid_argument("double star needs k >= 1");
    Graph g = disjoint_union(star(k), star(k));
    g.add_edge(0, k);
    return g;
}

Graph matching_graph(int k) {
    if (k < 1) throw std::invalid_argument("matching needs k >= 1");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    return complete_multipartite(PartitionSpec{{a, b}});
}

Graph even_linear_forest(const std::vector<int>& orders) {
    if (orders.empty())
        throw std::invalid_argument("even linear forest needs at least one path");
    Graph g(0);
    for (int m : orders) {
        if (m < 2 || m % 2 != 0)
            throw std::invalid_argument(
                "even linear forest components must have even order >= 2");
        g = disjoint_union(g, path_graph(m));
    }
    return g;
}

Graph near_regular(int n, int d) {
    if (n < 1 || d < 0 || d > n - 1)
        throw std::invalid_argument("near_regular needs 0 <= d <= n-1");
    std::vector<int> degs(n, d);
    if ((static_cast<long long>(n) * d) % 2 != 0) degs.back() = d - 1;
    return realize_sequence(DegreeSequence(std::move(degs)));
}

Graph pendant_extension(const Graph& base) {
    if (base.order() < 1)
        throw std::invalid_argument("pendant extension needs a nonempty base");
    return add_vertex(base, std::uint64_t{1});
}

namespace {

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer in family spec: '" +
                                    std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

std::string FamilySpec::to_string() const {
    using K = Kind;
    switch (kind) {
        case K::Path: return "P" + std::to_string(a);
        case K::Cycle: return "C" + std::to_string(a);
        case K::Clique: return "K" + std::to_string(a);
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
        case K::NearRegular:
            return "nearreg(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case K::PendantExtension: return "pendant(" + graph6_encode(base) + ")";
        case K::Custom: return "g6:" + graph6_encode(base);
    }
    return "?";
}

FamilySpec parse_family(const std::string& text) {
    using K = FamilySpec::Kind;
    if (text == "Cstar")
        throw std::invalid_argument(
            "Cstar is a pattern family, not a constructible graph");
    if (text.starts_with("g6:")) {
        FamilySpec spec{K::Custom};
        spec.base = graph6_decode(text.substr(3));
        return spec;
    }
    if (text.starts_with("Sstar:"))
        return FamilySpec{K::NearStar, parse_int(std::string_view(text).substr(6))};
    if (text.starts_with("Dstar:"))
        return FamilySpec{K::DoubleStar, parse_int(std::string_view(text).substr(6))};
    if (text.starts_with("Kab:")) {
        auto nums = parse_int_list(std::string_view(text).substr(4));
        if (nums.size() != 2)
            throw std::invalid_argument("Kab: expects two class sizes");
        return FamilySpec{K::CompleteBipartite, nums[0], nums[1]};
    }
    if (text.starts_with("forest:")) {
        FamilySpec spec{K::EvenLinearForest};
        spec.orders = parse_int_list(std::string_view(text).substr(7));
        return spec;
    }
    if (text.size() >= 2) {
        int value = parse_int(std::string_view(text).substr(1));
        switch (text[0]) {
            case 'P': return FamilySpec{K::Path, value};
            case 'C': return FamilySpec{K::Cycle, value};
            case 'K': return FamilySpec{K::Clique, value};
            case 'S': return FamilySpec{K::Star, value};
            case 'M': return FamilySpec{K::Matching, value};
            default: break;
        }
    }
    throw std::invalid_argument("unrecognized family spec: '" + text + "'");
}

Graph build_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Path: return path_graph(spec.a);
        case K::Cycle: return cycle_graph(spec.a);
        case K::Clique: return clique(spec.a);
        case K::Star: return star(spec.a);
        case K::NearStar: return near_star(spec.a);
        case K::DoubleStar: return double_star(spec.a);
        case K::Matching: return matching_graph(spec.a);
        case K::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case K::EvenLinearForest: return even_linear_forest(spec.orders);
        case K::NearRegular: return near_regular(spec.a, spec.b);
        case K::PendantExtension: return pendant_extension(spec.base);
        case K::Custom: return spec.base;
    }
    throw std::invalid_argument("unhandled family kind");
}

}  // namespace tpg
