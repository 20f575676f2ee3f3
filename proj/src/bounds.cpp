#include "tpgraph/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

namespace tpg {

BigInt turan_path_number(int n, int k) {
    if (n < 0 || k < 2) throw std::invalid_argument("need n >= 0 and k >= 2");
    unsigned r = static_cast<unsigned>(n / (k - 1));
    unsigned s = static_cast<unsigned>(n % (k - 1));
    return BigInt(r) * binomial(static_cast<unsigned>(k - 1), 2) + binomial(s, 2);
}

PowerSum power_sum_max(const PowerSumConstraint& c) {
    if (c.n < 0 || c.total_cap < 0 || c.term_cap < 0 || c.p < 1)
        throw std::invalid_argument("invalid power sum constraint");
    if (c.n == 0 || c.term_cap == 0) return 0;
    // convexity: as many terms as possible at the cap, one at the remainder
    long long usable = std::min(c.total_cap, c.term_cap * c.n);
    long long full = std::min<long long>(usable / c.term_cap, c.n);
    long long rest = (full < c.n) ? usable - full * c.term_cap : 0;
    return BigInt(full) * ipow(c.term_cap, c.p) + ipow(rest, c.p);
}

PigeonholeResult pigeonhole_check(const Graph& g, int a, int k) {
    if (a < 2 || k < 1) throw std::invalid_argument("need a >= 2 and k >= 1");
    PigeonholeResult out;
    for (int v = 0; v < g.order(); ++v)
        out.lhs += binomial(static_cast<unsigned>(g.degree(v)),
                            static_cast<unsigned>(k));
    out.rhs = BigInt(a - 1) * binomial(static_cast<unsigned>(g.order()),
                                       static_cast<unsigned>(k));
    out.certifies_containment = out.lhs > out.rhs;
    return out;
}

namespace {

// max-degree vertex first; its non-neighbors form one class and its
// neighborhood carries the recursion
void envelope_classes(const Graph& g, std::uint64_t mask,
                      std::vector<std::uint64_t>& classes) {
    if (mask == 0) return;
    int pivot = -1, best = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(g.neighbors(v) & mask);
        if (d > best) {
            best = d;
            pivot = v;
        }
    }
    classes.push_back(mask & ~g.neighbors(pivot));
    envelope_classes(g, mask & g.neighbors(pivot), classes);
}

}  // namespace

Graph erdos_envelope(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    if (contains_clique(g, k))
        throw std::invalid_argument("input contains the forbidden clique");
    std::vector<std::uint64_t> classes;
    envelope_classes(g, g.vertex_mask(), classes);
    // each recursion level strips a clique vertex, so K_k-freeness caps the
    // class count at k-1
    Graph out(g.order());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (std::uint64_t mu = classes[i]; mu; mu &= mu - 1)
                for (std::uint64_t mv = classes[j]; mv; mv &= mv - 1)
                    out.add_edge(std::countr_zero(mu), std::countr_zero(mv));
    return out;
}

namespace {

Prediction exact(BigInt value, std::string source, std::string caveat = "") {
    Prediction p;
    p.kind = Prediction::Kind::Exact;
    p.value = std::move(value);
    p.source = std::move(source);
    p.caveat = std::move(caveat);
    return p;
}

Prediction asymptotic(BigInt coeff, unsigned exponent, std::string source) {
    Prediction p;
    p.kind = Prediction::Kind::AsymptoticLeadingTerm;
    p.coefficient = std::move(coeff);
    p.exponent = exponent;
    p.source = std::move(source);
    return p;
}

constexpr const char* kLargeN = "n sufficiently large";

}  // namespace

Prediction predicted_tp(const Pattern& pattern, int n, unsigned p) {
    if (n < 0 || p < 1) throw std::invalid_argument("need n >= 0 and p >= 1");
    using K = Pattern::Kind;
    switch (pattern.kind) {
        case K::Clique: {
            if (p > 3) break;  // balanced classes are only optimal for p <= 3
            if (n < 1) return exact(0, "theorem-1.1");
            return exact(ep(turan_graph(n, pattern.a), p), "theorem-1.1");
        }
        case K::Path: {
            const int k = pattern.a;
            if (k == 2) return exact(0, "t_p(n,P2)=0");
            if (k == 3)
                return exact(n % 2 == 0 ? n : n - 1, "t_p(n,P3) by matching");
            if (n <= k - 1)
                return exact(BigInt(n) * ipow(n - 1, p),
                             "small n: the complete graph is P_k-free");
            return exact(ep(h_graph(n, k), p), "theorem-1.2", kLargeN);
        }
        case K::Star: {
            const int k = pattern.a;
            if (n <= k - 2)
                return exact(BigInt(n) * ipow(n - 1, p), "prop-4.2 case 1");
            if ((static_cast<long long>(n) * k) % 2 == 0)
                return exact(BigInt(n) * ipow(k - 2, p), "prop-4.2 case 2");
            return exact(BigInt(n - 1) * ipow(k - 2, p) + ipow(k - 3, p),
                         "prop-4.2 case 3");
        }
        case K::NearStar: {
            if (n <= 2 * pattern.a) break;  // the claim starts at n > 2k
            return exact(ipow(n - 1, p) + (n - 1), "prop-4.3");
        }
        case K::Matching:
        case K::EvenLinearForest: {
            int vertices = pattern.kind == K::Matching
                               ? 2 * pattern.a
                               : [&] {
                                     int s = 0;
                                     for (int m : pattern.orders) s += m;
                                     return s;
                                 }();
            if (vertices < 4) break;  // M_1 and P_2 leave nothing to forbid
            if (n < vertices)
                return exact(BigInt(n) * ipow(n - 1, p),
                             "small n: the complete graph fits no such forest");
            return exact(ep(h_graph(n, vertices), p), "prop-4.1", kLargeN);
        }
        case K::DoubleStar:
            return asymptotic(pattern.a - 1, p, "prop-4.4");
        case K::EvenCycleFamily: {
            if (p == 1 && n >= 1)
                return exact(2 * (BigInt(3) * (n - 1) / 2),
                             "edge bound for even-cycle-free graphs");
            if (p >= 2 && n >= 1)
                return exact(ep(friendship_graph(n), p), "theorem-1.3", kLargeN);
            break;
        }
        case K::CompleteBipartite: {
            if (p == static_cast<unsigned>(pattern.b))
                return asymptotic(pattern.a - 1, p, "prop-5.2");
            if (pattern.a == 2 && p >= static_cast<unsigned>(pattern.b))
                return asymptotic(1, p, "prop-5.2 (a=2 tail)");
            break;
        }
        case K::Cycle:
        case K::Custom:
            break;
    }
    throw std::invalid_argument("no known prediction for " +
                                pattern.to_string() + " at n=" +
                                std::to_string(n) + ", p=" + std::to_string(p));
}

}  // namespace tpg
