#include "tpgraph/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tpgraph/bounds.hpp"
#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"

namespace tpg {
namespace {

using Clock = std::chrono::steady_clock;

struct SuiteBuilder {
    SuiteReport report;

    void claim(std::string id, std::string params, std::string expected,
               std::string observed, bool pass) {
        report.claims.push_back({std::move(id), std::move(params),
                                 std::move(expected), std::move(observed),
                                 pass});
    }
    void check_eq(const std::string& id, const std::string& params,
                  const BigInt& expected, const BigInt& observed) {
        claim(id, params, expected.str(), observed.str(),
              expected == observed);
    }
    void check_true(const std::string& id, const std::string& params,
                    bool ok, const std::string& detail = "") {
        claim(id, params, "true", detail.empty() ? (ok ? "true" : "false")
                                                 : detail, ok);
    }
};

void for_all_classes(int n, const SearchOptions& opt,
                     const std::function<void(const Graph&)>& fn) {
    // K_{n+2} cannot occur on n vertices, so this streams every class
    enumerate_pattern_free(n, clique_pattern(n + 2), opt, fn);
}

std::string fmt_n(int n) { return "n=" + std::to_string(n); }

// ---------------------------------------------------------------------------

void suite_theorem_11(SuiteBuilder& b, const SearchOptions& opt) {
    for (int k : {3, 4}) {
        int n_lo = k, n_hi = (k == 3) ? 10 : 8;
        for (int n = n_lo; n <= n_hi; ++n) {
            auto results =
                exhaustive_tp_multi(n, clique_pattern(k), {1, 2, 3}, opt);
            for (unsigned pi = 0; pi < 3; ++pi) {
                BigInt expect = ep(turan_graph(n, k), pi + 1);
                b.check_eq("theorem-1.1/K" + std::to_string(k),
                           fmt_n(n) + " p=" + std::to_string(pi + 1), expect,
                           results[pi].value);
            }
        }
    }
    // sharpness at p=4: an unbalanced bipartition beats the balanced one
    auto opt10 = multipartite_tp(10, 3, 4);
    b.check_eq("theorem-1.1/sharpness-p4", "t_4(10,K3)", BigInt(8320),
               opt10.result.value);
    bool parts_28 = opt10.partitions.size() == 1 &&
                    opt10.partitions[0] == std::vector<int>{8, 2};
    b.check_true("theorem-1.1/sharpness-p4", "optimal parts (2,8)", parts_28);
    b.check_eq("theorem-1.1/sharpness-p4", "e_4(T(10,3))", BigInt(6250),
               ep(turan_graph(10, 3), 4));
    b.check_eq("theorem-1.1/sharpness-p4", "e_4(K_{4,6})", BigInt(6720),
               ep(complete_bipartite(4, 6), 4));

    // degree envelope: pointwise dominance by a complete multipartite graph
    for (auto [k, n_max] : std::vector<std::pair<int, int>>{{3, 7}, {4, 6}}) {
        long long checked = 0, good = 0;
        for (int n = 1; n <= n_max; ++n) {
            enumerate_pattern_free(n, clique_pattern(k), opt, [&](const Graph& g) {
                ++checked;
                Graph env = erdos_envelope(g, k);
                bool ok = !contains_clique(env, k);
                for (int v = 0; v < g.order() && ok; ++v)
                    ok = env.degree(v) >= g.degree(v);
                for (unsigned p = 1; p <= 3 && ok; ++p)
                    ok = ep(g, p) <= ep(env, p);
                good += ok;
            });
        }
        b.check_true("lemma-2.1/envelope",
                     "K" + std::to_string(k) + "-free, n<=" +
                         std::to_string(n_max),
                     checked == good,
                     std::to_string(good) + "/" + std::to_string(checked) +
                         " dominated");
    }
}

void suite_theorem_12(SuiteBuilder& b, const SearchOptions& opt) {
    for (auto [k, lo, hi] : std::vector<std::tuple<int, int, int>>{
             {4, 6, 12}, {6, 8, 12}}) {
        int onset = -1;
        for (int n = k; n <= hi; ++n) {
            auto res = exhaustive_tp(n, path_pattern(k), 2, opt);
            BigInt expect = ep(h_graph(n, k), 2);
            bool holds = res.value == expect && res.witnesses.size() == 1 &&
                         res.witnesses[0] == canonical_key(h_graph(n, k));
            if (!holds) onset = -1;
            else if (onset < 0) onset = n;
            if (n >= lo)
                b.check_true("theorem-1.2/P" + std::to_string(k),
                             fmt_n(n) + " p=2", holds,
                             "value=" + res.value.str() + " witnesses=" +
                                 std::to_string(res.witnesses.size()));
        }
        b.claim("theorem-1.2/P" + std::to_string(k) + "/onset",
                "first n with unique equality onward",
                "<= " + std::to_string(lo),
                onset < 0 ? "none" : std::to_string(onset),
                onset >= 0 && onset <= lo);
    }
}

void suite_theorem_13(SuiteBuilder& b, const SearchOptions& opt) {
    struct Row {
        int n;
        bool holds;
        BigInt closed;
        BigInt value;
    };
    std::vector<Row> rows;
    int onset = -1;
    for (int n = 7; n <= 12; ++n) {
        auto res = exhaustive_tp(n, even_cycle_family_pattern(), 2, opt);
        BigInt closed =
            n % 2 == 1 ? BigInt(n) * n + 2 * n - 3 : BigInt(n) * n + 2 * n - 6;
        Graph fn = friendship_graph(n);
        bool holds = res.value == closed && res.value == ep(fn, 2) &&
                     res.witnesses.size() == 1 &&
                     res.witnesses[0] == canonical_key(fn);
        if (!holds) onset = -1;
        else if (onset < 0) onset = n;
        rows.push_back({n, holds, closed, res.value});
    }
    // small-n exceptions below the onset are reported rather than failed
    for (const Row& r : rows)
        b.claim("theorem-1.3/Cstar", fmt_n(r.n) + " p=2", r.closed.str(),
                r.value.str() + (r.holds ? " (unique F_n)" : " (exception)"),
                r.holds || (onset >= 0 && r.n < onset));
    b.claim("theorem-1.3/onset", "first n with unique equality onward",
            "exists within 7..12", onset < 0 ? "none" : std::to_string(onset),
            onset >= 0);
}

void suite_lemma_p5(SuiteBuilder& b, const SearchOptions& opt) {
    for (unsigned p : {2u, 3u}) {
        auto res = exhaustive_tp(12, path_pattern(5), p, opt);
        BigInt expect = ipow(11, p) + ipow(2, p + 1) + 9;
        b.check_eq("lemma-p5/value", "n=12 p=" + std::to_string(p), expect,
                   res.value);
        bool unique = res.witnesses.size() == 1 &&
                      res.witnesses[0] == canonical_key(h_graph(12, 5));
        b.check_true("lemma-p5/unique-witness",
                     "n=12 p=" + std::to_string(p), unique);
        // exchange facts used in the argument
        b.check_true("lemma-p5/three-K4-vs-H(12,5)", "p=" + std::to_string(p),
                     BigInt(12) * ipow(3, p) < expect);
        Graph k4x3 = disjoint_union(disjoint_union(clique(4), clique(4)),
                                    clique(4));
        b.check_eq("lemma-p5/union-K4", "e_p of three K_4s, p=" +
                       std::to_string(p),
                   BigInt(12) * ipow(3, p), ep(k4x3, p));
        bool merge_ok = true;
        for (int r1 = 1; r1 <= 10 && merge_ok; ++r1)
            for (int r2 = 1; r2 <= r1 && merge_ok; ++r2)
                merge_ok = ep(h_graph(r1, 5), p) + ep(h_graph(r2, 5), p) <
                           ep(h_graph(r1 + r2, 5), p);
        b.check_true("lemma-p5/H-merge", "r1,r2 <= 10, p=" + std::to_string(p),
                     merge_ok);
        bool absorb_ok = true;
        for (int r = 4; r <= 16 && absorb_ok; ++r)
            absorb_ok = ep(h_graph(r + 4, 5), p) - ep(h_graph(r, 5), p) >
                        BigInt(4) * ipow(3, p);
        b.check_true("lemma-p5/H-absorbs-K4", "r=4..16, p=" + std::to_string(p),
                     absorb_ok);
    }
}

void suite_props_4(SuiteBuilder& b, const SearchOptions& opt) {
    // even linear forests: matching, P_4 and P_2+P_2 agree
    for (int n = 6; n <= 10; ++n) {
        auto m2 = exhaustive_tp(n, matching_pattern(2), 2, opt);
        auto p4 = exhaustive_tp(n, path_pattern(4), 2, opt);
        auto ff = exhaustive_tp(n, even_linear_forest_pattern({2, 2}), 2, opt);
        b.check_eq("prop-4.1/M2-vs-P4", fmt_n(n), p4.value, m2.value);
        b.check_eq("prop-4.1/forest22-vs-P4", fmt_n(n), p4.value, ff.value);
    }
    // stars
    for (int n = 5; n <= 10; ++n) {
        auto s4 = exhaustive_tp(n, star_pattern(4), 2, opt);
        b.check_eq("prop-4.2/S4", fmt_n(n) + " p=2", BigInt(4) * n, s4.value);
        auto s5 = exhaustive_tp(n, star_pattern(5), 2, opt);
        BigInt expect = n % 2 == 0 ? BigInt(9) * n : BigInt(9) * (n - 1) + 4;
        b.check_eq("prop-4.2/S5", fmt_n(n) + " p=2", expect, s5.value);
    }
    // near star: the plain star is extremal
    {
        auto res = exhaustive_tp(11, near_star_pattern(5), 2, opt);
        b.check_eq("prop-4.3/Sstar5", "n=11 p=2", BigInt(110), res.value);
        bool star_witness =
            std::find(res.witnesses.begin(), res.witnesses.end(),
                      canonical_key(star(11))) != res.witnesses.end();
        b.check_true("prop-4.3/Sstar5", "S_11 attains the maximum",
                     star_witness);
    }
    // balanced double star S_{3,3}: edge bound and bipartite lower bound
    for (int n = 6; n <= 10; ++n) {
        auto t1 = exhaustive_tp(n, double_star_pattern(3), 1, opt);
        b.check_true("prop-4.4/S33-edge-bound", fmt_n(n),
                     t1.value <= BigInt(4) * n,
                     "2e=" + t1.value.str() + " cap=" + std::to_string(4 * n));
        auto t2 = exhaustive_tp(n, double_star_pattern(3), 2, opt);
        BigInt lower = ep(complete_bipartite(2, n - 2), 2);
        b.check_true("prop-4.4/S33-lower-bound", fmt_n(n) + " p=2",
                     t2.value >= lower,
                     t2.value.str() + " >= " + lower.str());
    }
}

void suite_prop_22(SuiteBuilder& b, const SearchOptions& opt) {
    Pattern paw = custom_pattern(pendant_extension(clique(3)));
    int onset = -1;
    for (int n = 4; n <= 9; ++n) {
        auto with_pendant = exhaustive_tp(n, paw, 2, opt);
        auto plain = exhaustive_tp(n, clique_pattern(3), 2, opt);
        bool equal = with_pendant.value == plain.value;
        if (!equal) onset = -1;
        else if (onset < 0) onset = n;
        if (n >= 6)
            b.check_eq("prop-2.2/paw-vs-K3", fmt_n(n) + " p=2", plain.value,
                       with_pendant.value);
    }
    b.claim("prop-2.2/onset", "first n with equality onward", "<= 6",
            onset < 0 ? "none" : std::to_string(onset),
            onset >= 0 && onset <= 6);
}

void suite_prop_52(SuiteBuilder& b, const SearchOptions& opt) {
    auto k5 = pigeonhole_check(clique(5), 2, 3);
    b.check_true("prop-5.2/example-K5", "a=2 k=3",
                 k5.lhs == 20 && k5.rhs == 10 && k5.certifies_containment,
                 k5.lhs.str() + " vs " + k5.rhs.str());
    auto s6 = pigeonhole_check(star(6), 2, 2);
    b.check_true("prop-5.2/example-S6", "a=2 k=2",
                 s6.lhs == 10 && s6.rhs == 15 && !s6.certifies_containment,
                 s6.lhs.str() + " vs " + s6.rhs.str());

    for (auto [a, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        long long certified = 0, sound = 0, total = 0;
        for (int n = 1; n <= 7; ++n) {
            for_all_classes(n, opt, [&](const Graph& g) {
                ++total;
                auto res = pigeonhole_check(g, a, k);
                if (res.certifies_containment) {
                    ++certified;
                    sound += contains_complete_bipartite(g, a, k);
                }
            });
        }
        b.check_true("prop-5.2/soundness",
                     "a=" + std::to_string(a) + " k=" + std::to_string(k) +
                         ", all n<=7",
                     certified == sound,
                     std::to_string(certified) + " certificates over " +
                         std::to_string(total) + " graphs, all confirmed");
    }
}

void suite_identities(SuiteBuilder& b, const SearchOptions& opt) {
    // quadratic shift identity for the class-transfer argument
    bool shift_ok = true;
    for (int n = 3; n <= 50 && shift_ok; ++n)
        for (int y = 1; y < n && shift_ok; ++y)
            for (int x = y + 2; x + y <= n && shift_ok; ++x) {
                BigInt lhs = BigInt(y + 1) * ipow(n - y - 1, 2) +
                             BigInt(x - 1) * ipow(n - x + 1, 2) -
                             BigInt(y) * ipow(n - y, 2) -
                             BigInt(x) * ipow(n - x, 2);
                BigInt rhs = BigInt(x - y - 1) * (n + 3 * (n - x - y));
                shift_ok = lhs == rhs;
            }
    b.check_true("identity/p2-shift", "all n<=50, 1<=y, y+1<x, x+y<=n",
                 shift_ok);

    // transferring a vertex from a larger class strictly increases e_p
    for (unsigned p : {2u, 3u}) {
        bool inc_ok = true;
        for (int n = 3; n <= 30 && inc_ok; ++n)
            for (int y = 1; y < n && inc_ok; ++y)
                for (int x = y + 2; x + y <= n && inc_ok; ++x) {
                    BigInt diff = BigInt(y + 1) * ipow(n - y - 1, p) +
                                  BigInt(x - 1) * ipow(n - x + 1, p) -
                                  BigInt(y) * ipow(n - y, p) -
                                  BigInt(x) * ipow(n - x, p);
                    inc_ok = diff > 0;
                }
        b.check_true("identity/transfer-increases",
                     "p=" + std::to_string(p) + ", all n<=30", inc_ok);
    }

    // friendship graph closed forms
    bool fn_ok = true;
    for (int n = 3; n <= 40 && fn_ok; ++n) {
        Graph fn = friendship_graph(n);
        BigInt closed =
            n % 2 == 1 ? BigInt(n) * n + 2 * n - 3 : BigInt(n) * n + 2 * n - 6;
        fn_ok = ep(fn, 2) == closed &&
                fn.edge_count() == (n - 1) + (n - 1) / 2;
        }
    b.check_true("identity/friendship-e2", "n=3..40", fn_ok);

    // path Turan numbers against exhaustive edge maxima (t_1 = 2t)
    for (int k : {4, 5, 6}) {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= 9 && ok; ++n) {
            auto res = exhaustive_tp(n, path_pattern(k), 1, opt);
            BigInt expect = 2 * turan_path_number(n, k);
            ok = res.value == expect;
            if (!ok)
                detail = fmt_n(n) + ": " + res.value.str() + " != " +
                         expect.str();
        }
        b.check_true("lemma-3.1/path-turan",
                     "k=" + std::to_string(k) + ", n<=9", ok, detail);
    }

    // capped power sums against brute force
    bool psm_ok = true;
    for (int n = 0; n <= 5 && psm_ok; ++n)
        for (long long S = 0; S <= 10 && psm_ok; ++S)
            for (long long D = 0; D <= 6 && psm_ok; ++D)
                for (unsigned p : {2u, 3u}) {
                    BigInt brute = 0;
                    std::vector<long long> xs(n, 0);
                    auto rec = [&](auto&& self, int i, long long left,
                                   long long cap) -> void {
                        if (i == n) {
                            BigInt v = 0;
                            for (long long x : xs) v += ipow(x, p);
                            brute = std::max(brute, v);
                            return;
                        }
                        for (long long x = std::min(cap, left); x >= 0; --x) {
                            xs[i] = x;
                            self(self, i + 1, left - x, x);
                        }
                    };
                    rec(rec, 0, std::min(S, D * n), D);
                    psm_ok = power_sum_max({n, S, D, p}) == brute;
                    if (!psm_ok) break;
                }
    b.check_true("lemma-3.3/power-sum-max",
                 "brute force grid n<=5, S<=10, D<=6, p in {2,3}", psm_ok);

    // multipartite degree arithmetic
    bool mp_ok = true;
    for (auto parts : std::vector<std::vector<int>>{
             {5, 5}, {4, 3}, {4, 3, 3}, {2, 8}, {1, 1, 1}, {6, 2, 2, 2}}) {
        int n = 0;
        for (int s : parts) n += s;
        for (unsigned p = 1; p <= 4; ++p) {
            BigInt expect = 0;
            for (int s : parts) expect += BigInt(s) * ipow(n - s, p);
            mp_ok = mp_ok &&
                    ep(complete_multipartite(PartitionSpec{parts}), p) == expect;
        }
    }
    b.check_true("identity/multipartite-ep", "sample partitions, p<=4", mp_ok);
}

void suite_detectors(SuiteBuilder& b, const SearchOptions& opt) {
    // specialized detectors against the generic embedding oracle on all
    // six-vertex graphs
    std::vector<std::string> pattern_texts = {
        "P4", "P5", "P6", "K3", "K4", "K5", "C4", "C5", "C6", "M2", "M3",
        "S4", "S5", "Kab:2,2", "Kab:2,3", "Sstar:5", "Dstar:2"};
    std::vector<Pattern> patterns;
    for (const auto& t : pattern_texts) patterns.push_back(parse_pattern(t));
    long long rows = 0, agree = 0;
    for_all_classes(6, opt, [&](const Graph& g) {
        for (const auto& pat : patterns) {
            ++rows;
            Graph pg = pat.single_graph();
            bool generic =
                pg.order() <= g.order() ? contains_subgraph(g, pg) : false;
            agree += (is_pattern_free(g, pat) == !generic);
        }
    });
    b.check_true("detectors/cross-validation",
                 "156 classes x " + std::to_string(patterns.size()) +
                     " patterns",
                 rows == agree,
                 std::to_string(agree) + "/" + std::to_string(rows));

    // block-decomposition test vs explicit even-cycle containment
    long long checked = 0, match = 0;
    for (int n = 1; n <= 8; ++n) {
        for_all_classes(n, opt, [&](const Graph& g) {
            ++checked;
            bool any = false;
            for (int t = 2; 2 * t <= g.order() && !any; ++t)
                any = contains_subgraph(g, cycle_graph(2 * t));
            match += (contains_even_cycle(g) == any);
        });
    }
    b.check_true("detectors/even-cycle-blocks", "all n<=8", checked == match,
                 std::to_string(match) + "/" + std::to_string(checked));

    // structural consequences of even-cycle-freeness
    bool edge_ok = true, degree_ok = true;
    for (int n = 1; n <= 12; ++n) {
        enumerate_pattern_free(n, even_cycle_family_pattern(), opt,
                               [&](const Graph& g) {
                                   edge_ok = edge_ok &&
                                             g.edge_count() <= 3 * (n - 1) / 2;
                                   DegreeSequence ds = degree_sequence(g);
                                   int top2 = ds.values[0] +
                                              (n > 1 ? ds.values[1] : 0);
                                   degree_ok = degree_ok && top2 <= n + 1;
                               });
    }
    b.check_true("detectors/cstar-edge-bound", "n<=12", edge_ok);
    b.check_true("detectors/cstar-top-degrees", "d1+d2 <= n+1, n<=12",
                 degree_ok);

    // P_k-free edge bound e(G) <= n(k-2)/2
    for (int k = 4; k <= 7; ++k) {
        bool ok = true;
        for (int n = 1; n <= 10 && ok; ++n) {
            auto res = exhaustive_tp(n, path_pattern(k), 1, opt);
            ok = res.value <= BigInt(n) * (k - 2);
        }
        b.check_true("corollary-3.2/path-edge-bound",
                     "k=" + std::to_string(k) + ", n<=10", ok);
    }

    // heredity: deleting any edge of a pattern-free graph keeps it free
    std::vector<std::pair<Pattern, Graph>> hered = {
        {path_pattern(5), h_graph(12, 5)},
        {even_cycle_family_pattern(), friendship_graph(11)},
        {clique_pattern(4), turan_graph(10, 4)},
        {star_pattern(5), near_regular(10, 3)},
    };
    bool hered_ok = true;
    for (auto& [pat, g] : hered) {
        hered_ok = hered_ok && is_pattern_free(g, pat);
        for (auto [u, v] : g.edges()) {
            Graph h = g;
            h.remove_edge(u, v);
            hered_ok = hered_ok && is_pattern_free(h, pat);
        }
    }
    b.check_true("detectors/heredity", "single-edge deletions", hered_ok);
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"theorem-1.1", "theorem-1.2", "theorem-1.3", "lemma-p5",
            "props-4",     "prop-2.2",    "prop-5.2",    "identities",
            "detectors"};
}

SuiteReport run_verification_suite(const std::string& name,
                                   const SearchOptions& opt) {
    auto t0 = Clock::now();
    SuiteBuilder b;
    b.report.name = name;
    if (name == "theorem-1.1") suite_theorem_11(b, opt);
    else if (name == "theorem-1.2") suite_theorem_12(b, opt);
    else if (name == "theorem-1.3") suite_theorem_13(b, opt);
    else if (name == "lemma-p5") suite_lemma_p5(b, opt);
    else if (name == "props-4") suite_props_4(b, opt);
    else if (name == "prop-2.2") suite_prop_22(b, opt);
    else if (name == "prop-5.2") suite_prop_52(b, opt);
    else if (name == "identities") suite_identities(b, opt);
    else if (name == "detectors") suite_detectors(b, opt);
    else if (name == "all") {
        for (const auto& sub : suite_names()) {
            SuiteReport part = run_verification_suite(sub, opt);
            for (auto& c : part.claims) b.report.claims.push_back(std::move(c));
        }
    } else {
        throw std::invalid_argument("unknown suite id: '" + name + "'");
    }
    b.report.pass = std::all_of(b.report.claims.begin(), b.report.claims.end(),
                                [](const Claim& c) { return c.pass; });
    b.report.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return b.report;
}

ProbeTable probe_conjecture(const std::string& name, int n_min, int n_max,
                            unsigned p, int k, const SearchOptions& opt) {
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("bad probe range");
    ProbeTable table;
    table.name = name;
    if (name == "problem-6.3") {
        table.columns = {"n", "t_" + std::to_string(p) + "(n,C4)",
                         "e_" + std::to_string(p) + "(F_n)", "equal"};
        for (int n = n_min; n <= n_max; ++n) {
            auto res = exhaustive_tp(n, cycle_pattern(4), p, opt);
            BigInt fn = ep(friendship_graph(n), p);
            table.rows.push_back({std::to_string(n), res.value.str(),
                                  fn.str(), res.value == fn ? "yes" : "no"});
        }
    } else if (name == "conjecture-6.4") {
        if (k < 2) throw std::invalid_argument("conjecture-6.4 needs k >= 2");
        table.columns = {"n", "t_" + std::to_string(p) + "(n,C" +
                                  std::to_string(2 * k) + ")",
                         "exhaustive",
                         "(k-1)n^" + std::to_string(p)};
        for (int n = n_min; n <= n_max; ++n) {
            auto res = exhaustive_tp(n, cycle_pattern(2 * k), p, opt);
            BigInt lead = BigInt(k - 1) * ipow(n, p);
            table.rows.push_back({std::to_string(n), res.value.str(),
                                  res.exhaustive ? "true" : "false",
                                  lead.str()});
        }
    } else {
        throw std::invalid_argument("unknown probe id: '" + name + "'");
    }
    return table;
}

}  // namespace tpg
