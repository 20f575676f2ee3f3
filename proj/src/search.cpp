#include "tpgraph/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <memory>
#include <tuple>
#include <unordered_set>

#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

namespace tpg {
namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Extension checks: would attaching the new vertex w to neighbor set T create
// the pattern? The parent is pattern-free, so only subgraphs through w need
// testing, and badness is monotone in T (more edges only add subgraphs),
// which lets the subset tree prune whole branches.

class ExtChecker {
public:
    virtual ~ExtChecker() = default;
    virtual void attach(const Graph& parent) {}
    // `child` is parent + w, with the edge (w, v) already present and the
    // full neighbor set of w equal to t_mask (v included).
    virtual bool creates_pattern(const Graph& child, int w, u64 t_mask,
                                 int v) = 0;
};

class CliqueExt final : public ExtChecker {
public:
    explicit CliqueExt(int k) : k_(k) {}
    bool creates_pattern(const Graph& child, int /*w*/, u64 t_mask,
                         int v) override {
        if (k_ <= 2) return true;  // any edge completes K_2
        // a new K_k through w needs a (k-2)-clique among v's earlier
        // co-neighbors of w
        u64 others = child.neighbors(v) & t_mask & ~(u64{1} << v);
        return clique_in_vertex_set(child, others, k_ - 2);
    }

private:
    int k_;
};

class StarExt final : public ExtChecker {
public:
    explicit StarExt(int k) : cap_(k - 2) {}
    bool creates_pattern(const Graph& child, int w, u64 /*t_mask*/,
                         int v) override {
        return child.degree(w) > cap_ || child.degree(v) > cap_;
    }

private:
    int cap_;
};

class MatchingExt final : public ExtChecker {
public:
    explicit MatchingExt(int k) : k_(k) {}
    void attach(const Graph& parent) override {
        forbidden_ = 0;
        u64 all = parent.vertex_mask();
        for (int v = 0; v < parent.order(); ++v)
            if (1 + max_matching_size(parent, all & ~(u64{1} << v)) >= k_)
                forbidden_ |= u64{1} << v;
    }
    bool creates_pattern(const Graph&, int, u64, int v) override {
        // a maximum matching using w pairs it with one neighbor
        return (forbidden_ >> v) & 1u;
    }

private:
    int k_;
    u64 forbidden_ = 0;
};

// Cycles through w correspond to parent paths between two of w's neighbors:
// an exact-length path for C_m, any odd-order path (>= 3 vertices) for the
// even-cycle family. Pairs are precomputed per parent, so a push costs O(1).
class PairPathExt final : public ExtChecker {
public:
    enum class Mode { ExactOrder, OddOrderAtLeast3 };
    PairPathExt(Mode mode, int order) : mode_(mode), order_(order) {}

    void attach(const Graph& parent) override {
        bad_.assign(parent.order(), 0);
        for (int src = 0; src < parent.order(); ++src)
            walk(parent, src, src, u64{1} << src, 1);
    }

    bool creates_pattern(const Graph&, int, u64 t_mask, int v) override {
        return (bad_[v] & t_mask & ~(u64{1} << v)) != 0;
    }

private:
    void walk(const Graph& g, int src, int cur, u64 used, int nverts) {
        if (cur != src) {
            if (mode_ == Mode::ExactOrder ? nverts == order_
                                          : (nverts >= 3 && nverts % 2 == 1))
                bad_[src] |= u64{1} << cur;
        }
        if (mode_ == Mode::ExactOrder && nverts == order_) return;
        for (u64 m = g.neighbors(cur) & ~used; m; m &= m - 1) {
            int nxt = std::countr_zero(m);
            walk(g, src, nxt, used | (u64{1} << nxt), nverts + 1);
        }
    }

    Mode mode_;
    int order_;
    std::vector<u64> bad_;
};

// Fallback: run a containment check on the extended graph. The parent is
// pattern-free, so a hit is exactly "creates the pattern".
class WholeGraphExt final : public ExtChecker {
public:
    explicit WholeGraphExt(std::function<bool(const Graph&)> contains)
        : contains_(std::move(contains)) {}
    bool creates_pattern(const Graph& child, int, u64, int) override {
        return contains_(child);
    }

private:
    std::function<bool(const Graph&)> contains_;
};

std::unique_ptr<ExtChecker> make_checker(const Pattern& pattern) {
    using K = Pattern::Kind;
    switch (pattern.kind) {
        case K::Clique:
            return std::make_unique<CliqueExt>(pattern.a);
        case K::Star:
            return std::make_unique<StarExt>(pattern.a);
        case K::Matching:
            return std::make_unique<MatchingExt>(pattern.a);
        case K::Cycle:
            return std::make_unique<PairPathExt>(PairPathExt::Mode::ExactOrder,
                                                 pattern.a - 1);
        case K::EvenCycleFamily:
            return std::make_unique<PairPathExt>(
                PairPathExt::Mode::OddOrderAtLeast3, 0);
        case K::Path:
            return std::make_unique<WholeGraphExt>([k = pattern.a](const Graph& g) {
                return k <= g.order() && contains_path(g, k);
            });
        case K::CompleteBipartite:
            return std::make_unique<WholeGraphExt>(
                [a = pattern.a, b = pattern.b](const Graph& g) {
                    return contains_complete_bipartite(g, a, b);
                });
        case K::NearStar:
        case K::DoubleStar:
        case K::EvenLinearForest:
        case K::Custom:
            return std::make_unique<WholeGraphExt>(
                [pg = pattern.single_graph()](const Graph& g) {
                    return pg.order() <= g.order() && contains_subgraph(g, pg);
                });
    }
    throw std::invalid_argument("unhandled pattern kind");
}

// Expands one parent: every neighbor subset that stays pattern-free yields a
// child class candidate.
struct ParentExpander {
    const Graph& parent;
    ExtChecker& checker;
    Graph child;
    int w;
    std::unordered_set<CanonicalKey>& sink;

    ParentExpander(const Graph& g, ExtChecker& chk,
                   std::unordered_set<CanonicalKey>& out)
        : parent(g), checker(chk), child(add_vertex(g, 0)), w(g.order()),
          sink(out) {
        checker.attach(parent);
    }

    void grow(int from, u64 t_mask) {
        sink.insert(canonical_key(child));
        for (int v = from; v < w; ++v) {
            child.add_edge(w, v);
            if (!checker.creates_pattern(child, w, t_mask | (u64{1} << v), v))
                grow(v + 1, t_mask | (u64{1} << v));
            child.remove_edge(w, v);
        }
    }
};

std::unordered_set<CanonicalKey> expand_range(
    const std::vector<CanonicalKey>& parents, std::size_t begin,
    std::size_t end, const Pattern& pattern) {
    std::unordered_set<CanonicalKey> local;
    auto checker = make_checker(pattern);
    for (std::size_t i = begin; i < end; ++i) {
        Graph parent = graph_from_key(parents[i]);
        ParentExpander expander(parent, *checker, local);
        expander.grow(0, 0);
    }
    return local;
}

std::uint64_t enumerate_core(
    int n, const Pattern& pattern, const SearchOptions& opt,
    const std::function<void(const Graph&, const CanonicalKey&)>& on_class) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("enumeration order out of range");
    if (opt.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (n > opt.max_order)
        throw BudgetError("enumeration at n=" + std::to_string(n) +
                          " exceeds the budget (max_order=" +
                          std::to_string(opt.max_order) + ")");
    if (n == 0) {
        Graph empty(0);
        on_class(empty, canonical_key(empty));
        return 1;
    }

    std::vector<CanonicalKey> level{canonical_key(Graph(1))};
    for (int size = 1; size < n; ++size) {
        std::unordered_set<CanonicalKey> merged;
        if (opt.jobs == 1 || level.size() < 64) {
            merged = expand_range(level, 0, level.size(), pattern);
        } else {
            std::vector<std::future<std::unordered_set<CanonicalKey>>> futs;
            std::size_t chunk = (level.size() + opt.jobs - 1) / opt.jobs;
            for (std::size_t b = 0; b < level.size(); b += chunk) {
                std::size_t e = std::min(level.size(), b + chunk);
                futs.push_back(std::async(std::launch::async, expand_range,
                                          std::cref(level), b, e,
                                          std::cref(pattern)));
            }
            for (auto& f : futs) {
                auto part = f.get();
                merged.merge(part);
            }
        }
        if (merged.size() > opt.max_classes)
            throw BudgetError("class budget exceeded at n=" +
                              std::to_string(size + 1) + " (" +
                              std::to_string(merged.size()) + " classes)");
        level.clear();
        level.reserve(merged.size());
        while (!merged.empty())
            level.push_back(std::move(
                merged.extract(merged.begin()).value()));
    }

    for (const CanonicalKey& key : level) on_class(graph_from_key(key), key);
    return level.size();
}

// Exact e_p evaluation against a running maximum; uses 64-bit arithmetic
// whenever n * (n-1)^p fits, exact big integers otherwise.
struct MaxTracker {
    unsigned p;
    bool fits64;
    std::vector<u64> pow64;
    std::vector<BigInt> powBig;
    u64 best64 = 0;
    BigInt bestBig;
    bool seen = false;
    std::vector<CanonicalKey> witnesses;

    MaxTracker(int n, unsigned p_) : p(p_) {
        int top = std::max(n - 1, 1);
        BigInt cap = BigInt(n) * ipow(top, p);
        fits64 = cap < BigInt(~u64{0});
        if (fits64) {
            pow64.resize(n + 1);
            for (int d = 0; d <= n; ++d)
                pow64[d] = static_cast<u64>(ipow(d, p));
        } else {
            powBig.resize(n + 1);
            for (int d = 0; d <= n; ++d) powBig[d] = ipow(d, p);
        }
    }

    void consider(const Graph& g, const CanonicalKey& key) {
        if (fits64) {
            u64 val = 0;
            for (int v = 0; v < g.order(); ++v) val += pow64[g.degree(v)];
            if (!seen || val > best64) {
                best64 = val;
                seen = true;
                witnesses.assign(1, key);
            } else if (val == best64) {
                witnesses.push_back(key);
            }
        } else {
            BigInt val = 0;
            for (int v = 0; v < g.order(); ++v) val += powBig[g.degree(v)];
            if (!seen || val > bestBig) {
                bestBig = std::move(val);
                seen = true;
                witnesses.assign(1, key);
            } else if (val == bestBig) {
                witnesses.push_back(key);
            }
        }
    }

    PowerSum value() const {
        if (!seen) return 0;
        return fits64 ? BigInt(best64) : bestBig;
    }
};

}  // namespace

std::uint64_t enumerate_pattern_free(
    int n, const Pattern& pattern, const SearchOptions& opt,
    const std::function<void(const Graph&)>& sink) {
    return enumerate_core(n, pattern, opt,
                          [&](const Graph& g, const CanonicalKey&) { sink(g); });
}

std::vector<SearchResult> exhaustive_tp_multi(int n, const Pattern& pattern,
                                              const std::vector<unsigned>& ps,
                                              const SearchOptions& opt) {
    auto t0 = Clock::now();
    for (unsigned p : ps)
        if (p < 1) throw std::invalid_argument("p must be >= 1");
    std::vector<MaxTracker> trackers;
    trackers.reserve(ps.size());
    for (unsigned p : ps) trackers.emplace_back(n, p);

    std::uint64_t count =
        enumerate_core(n, pattern, opt,
                       [&](const Graph& g, const CanonicalKey& key) {
                           for (auto& t : trackers) t.consider(g, key);
                       });

    std::vector<SearchResult> out;
    for (auto& t : trackers) {
        SearchResult res;
        res.value = t.value();
        res.witnesses = t.witnesses;
        std::sort(res.witnesses.begin(), res.witnesses.end());
        res.exhaustive = true;
        res.enumerated = count;
        res.elapsed_seconds = seconds_since(t0);
        for (const CanonicalKey& key : res.witnesses)
            if (!is_pattern_free(graph_from_key(key), pattern))
                throw std::logic_error("witness failed re-verification");
        out.push_back(std::move(res));
    }
    return out;
}

SearchResult exhaustive_tp(int n, const Pattern& pattern, unsigned p,
                           const SearchOptions& opt) {
    return exhaustive_tp_multi(n, pattern, {p}, opt).front();
}

MultipartiteResult multipartite_tp(int n, int k, unsigned p) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("n out of range");
    if (k < 2 || p < 1) throw std::invalid_argument("need k >= 2 and p >= 1");
    auto t0 = Clock::now();

    std::vector<BigInt> pw(n + 1);
    for (int d = 0; d <= n; ++d) pw[d] = ipow(d, p);

    MultipartiteResult out;
    BigInt best = -1;
    std::uint64_t count = 0;
    std::vector<int> parts;

    auto evaluate = [&] {
        ++count;
        BigInt val = 0;
        for (int s : parts) val += BigInt(s) * pw[n - s];
        if (val > best) {
            best = val;
            out.partitions.assign(1, parts);
        } else if (val == best) {
            out.partitions.push_back(parts);
        }
    };
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            evaluate();
            return;
        }
        if (static_cast<int>(parts.size()) == k - 1) return;
        for (int s = std::min(max_part, remaining); s >= 1; --s) {
            parts.push_back(s);
            self(self, remaining - s, s);
            parts.pop_back();
        }
    };
    rec(rec, n, n);

    out.result.value = best;
    out.result.exhaustive = true;
    out.result.enumerated = count;
    for (const auto& partition : out.partitions) {
        Graph g = partition.empty()
                      ? Graph(0)
                      : complete_multipartite(PartitionSpec{partition});
        out.result.witnesses.push_back(canonical_key(g));
    }
    std::sort(out.result.witnesses.begin(), out.result.witnesses.end());
    out.result.witnesses.erase(std::unique(out.result.witnesses.begin(),
                                           out.result.witnesses.end()),
                               out.result.witnesses.end());
    out.result.elapsed_seconds = seconds_since(t0);
    return out;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

u64 splitmix64(u64& state) {
    state += 0x9e3779b97f4a7c15ULL;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

u64 bounded(u64& state, u64 bound) { return splitmix64(state) % bound; }

Graph random_pattern_free(int n, const Pattern& pattern, u64 seed) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    u64 state = seed;
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[bounded(state, i)]);
    Graph g(n);
    for (auto [u, v] : pairs) {
        g.add_edge(u, v);
        if (!is_pattern_free(g, pattern)) g.remove_edge(u, v);
    }
    return g;
}

struct Climber {
    const Pattern& pattern;
    std::vector<BigInt> pw;    // pw[d] = d^p
    std::vector<BigInt> gain;  // gain[d] = (d+1)^p - d^p
    Graph g;
    BigInt value = 0;

    Climber(const Pattern& pat, int n, unsigned p) : pattern(pat) {
        pw.resize(n + 1);
        for (int d = 0; d <= n; ++d) pw[d] = ipow(d, p);
        gain.resize(n);
        for (int d = 0; d + 1 <= n; ++d) gain[d] = pw[d + 1] - pw[d];
    }

    void reset(Graph start) {
        g = std::move(start);
        value = 0;
        for (int v = 0; v < g.order(); ++v) value += pw[g.degree(v)];
    }

    bool try_adds() {
        std::vector<std::tuple<BigInt, int, int>> cands;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.has_edge(u, v))
                    cands.emplace_back(gain[g.degree(u)] + gain[g.degree(v)],
                                       u, v);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b))
                return std::get<0>(a) > std::get<0>(b);
            return std::tie(std::get<1>(a), std::get<2>(a)) <
                   std::tie(std::get<1>(b), std::get<2>(b));
        });
        for (const auto& [delta, u, v] : cands) {
            g.add_edge(u, v);
            if (is_pattern_free(g, pattern)) {
                value += delta;
                return true;
            }
            g.remove_edge(u, v);
        }
        return false;
    }

    BigInt rewire_delta(int a, int b, int u, int v) const {
        int d[4] = {a, b, u, v};
        int shift[4] = {-1, -1, +1, +1};
        BigInt delta = 0;
        for (int i = 0; i < 4; ++i) {
            int net = shift[i];
            bool dup = false;
            for (int j = 0; j < i; ++j)
                if (d[j] == d[i]) dup = true;
            if (dup) continue;
            for (int j = i + 1; j < 4; ++j)
                if (d[j] == d[i]) net += shift[j];
            delta += pw[g.degree(d[i]) + net] - pw[g.degree(d[i])];
        }
        return delta;
    }

    bool try_rewires() {
        auto edge_list = g.edges();
        for (auto [a, b] : edge_list) {
            for (int u = 0; u < g.order(); ++u) {
                for (int v = u + 1; v < g.order(); ++v) {
                    if (g.has_edge(u, v)) continue;
                    BigInt delta = rewire_delta(a, b, u, v);
                    if (delta <= 0) continue;
                    g.remove_edge(a, b);
                    g.add_edge(u, v);
                    if (is_pattern_free(g, pattern)) {
                        value += delta;
                        return true;
                    }
                    g.remove_edge(u, v);
                    g.add_edge(a, b);
                }
            }
        }
        return false;
    }

    // Pure deletions strictly lower every degree power sum, so they can
    // never pass the strict-improvement rule; they are not generated.
    int run(const LocalSearchConfig& cfg) {
        int steps = 0;
        while (steps < cfg.step_budget) {
            if (cfg.allow_add && try_adds()) {
                ++steps;
                continue;
            }
            if (cfg.allow_rewire && try_rewires()) {
                ++steps;
                continue;
            }
            break;
        }
        return steps;
    }
};

}  // namespace

bool best_known_witness(int n, const Pattern& pattern, unsigned p, Graph& out) {
    if (n < 1) return false;
    using K = Pattern::Kind;
    std::vector<Graph> candidates;
    auto add = [&](Graph g) {
        if (g.order() == n && is_pattern_free(g, pattern))
            candidates.push_back(std::move(g));
    };
    switch (pattern.kind) {
        case K::Clique: {
            auto opt = multipartite_tp(n, pattern.a, p);
            add(graph_from_key(opt.result.witnesses.front()));
            break;
        }
        case K::Path:
            if (n <= pattern.a - 1) add(clique(n));
            else add(h_graph(n, pattern.a));
            break;
        case K::Cycle: {
            if (n < pattern.a) add(clique(n));
            if (pattern.a % 2 == 0) {
                add(friendship_graph(n));
                int half = pattern.a / 2;
                if (half - 1 >= 1 && n - half + 1 >= 1)
                    add(complete_bipartite(half - 1, n - half + 1));
                if (n >= pattern.a) add(h_graph(n, pattern.a));
            } else {
                for (int x = 1; x <= n / 2; ++x)
                    add(complete_bipartite(x, n - x));
            }
            break;
        }
        case K::EvenCycleFamily:
            add(friendship_graph(n));
            break;
        case K::Star:
            if (n <= pattern.a - 2) add(clique(n));
            else if (pattern.a - 2 <= n - 1) add(near_regular(n, pattern.a - 2));
            break;
        case K::NearStar:
            add(star(n));
            if (n < pattern.a) add(clique(n));
            break;
        case K::DoubleStar:
            if (n < 2 * pattern.a) add(clique(n));
            if (n - pattern.a + 1 >= 1 && pattern.a - 1 >= 1)
                add(complete_bipartite(pattern.a - 1, n - pattern.a + 1));
            break;
        case K::Matching:
            if (n < 2 * pattern.a) add(clique(n));
            else add(h_graph(n, 2 * pattern.a));
            break;
        case K::EvenLinearForest: {
            int vertices = 0;
            for (int m : pattern.orders) vertices += m;
            if (n < vertices) add(clique(n));
            else if (vertices >= 4) add(h_graph(n, vertices));
            else add(Graph(n));  // forbidding P_2 leaves the empty graph
            break;
        }
        case K::CompleteBipartite:
            if (n < pattern.a + pattern.b) add(clique(n));
            if (pattern.a - 1 >= 1 && n - pattern.a + 1 >= 1)
                add(complete_bipartite(pattern.a - 1, n - pattern.a + 1));
            break;
        case K::Custom:
            break;
    }
    if (candidates.empty()) return false;
    std::size_t best = 0;
    PowerSum best_val = ep(candidates[0], p);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        PowerSum val = ep(candidates[i], p);
        if (val > best_val) {
            best_val = std::move(val);
            best = i;
        }
    }
    out = candidates[best];
    return true;
}

SearchResult local_search_tp(int n, const Pattern& pattern, unsigned p,
                             const LocalSearchConfig& cfg) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("n out of range");
    if (p < 1 || cfg.restarts < 1 || cfg.step_budget < 0)
        throw std::invalid_argument("bad local search configuration");
    auto t0 = Clock::now();

    Climber climber(pattern, n, p);
    BigInt best_value = -1;
    Graph best_graph(n);
    std::uint64_t visited = 0;

    for (int r = 0; r < cfg.restarts; ++r) {
        Graph start(n);
        if (r == 0) {
            if (!best_known_witness(n, pattern, p, start)) start = Graph(n);
        } else {
            u64 restart_seed =
                cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<u64>(r);
            start = random_pattern_free(n, pattern, restart_seed);
        }
        climber.reset(std::move(start));
        visited += 1 + climber.run(cfg);
        if (climber.value > best_value) {
            best_value = climber.value;
            best_graph = climber.g;
        }
    }

    if (!is_pattern_free(best_graph, pattern))
        throw std::logic_error("local search witness failed re-verification");

    SearchResult res;
    res.value = best_value;
    res.witnesses.push_back(canonical_key(best_graph));
    res.exhaustive = false;
    res.enumerated = visited;
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

}  // namespace tpg
