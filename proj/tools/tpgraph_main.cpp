#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpgraph/bounds.hpp"
#include "tpgraph/detectors.hpp"
#include "tpgraph/families.hpp"
#include "tpgraph/search.hpp"
#include "tpgraph/store.hpp"
#include "tpgraph/suites.hpp"

namespace {

using nlohmann::json;
using namespace tpg;

// exit codes: 0 ok, 1 computation error, 2 usage error, 3 verification failed
constexpr int kOk = 0;
constexpr int kComputationError = 1;
constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 3;

struct CommonFlags {
    std::string format = "text";
    int jobs = 1;
    int budget = 12;  // maximum enumeration order
    std::string store_path;
};

SearchOptions options_from(const CommonFlags& flags) {
    SearchOptions opt;
    opt.jobs = flags.jobs;
    opt.max_order = flags.budget;
    return opt;
}

void store_result(const CommonFlags& flags, const std::string& pattern_text,
                  int n, unsigned p, const SearchResult& result) {
    if (flags.store_path.empty()) return;
    ResultsStore store = ResultsStore::load(flags.store_path);
    store.merge(make_record(pattern_text, n, p, result));
    store.save(flags.store_path);
}

void print_result(const CommonFlags& flags, const std::string& pattern_text,
                  int n, unsigned p, const SearchResult& result) {
    StoreRecord rec = make_record(pattern_text, n, p, result);
    if (flags.format == "json") {
        std::cout << ResultsStore::to_json({rec}) << "\n";
    } else if (flags.format == "csv") {
        std::cout << ResultsStore::to_csv({rec});
    } else {
        std::cout << result.value.str() << "\n";
        std::cout << "  pattern=" << pattern_text << " n=" << n << " p=" << p
                  << " exhaustive=" << (result.exhaustive ? "true" : "false")
                  << " classes=" << result.enumerated
                  << " witnesses=" << rec.witnesses.size() << "\n";
        for (const auto& w : rec.witnesses) std::cout << "  witness " << w << "\n";
    }
}

void print_table(const CommonFlags& flags, const ProbeTable& table) {
    if (flags.format == "json") {
        json j{{"name", table.name},
               {"columns", table.columns},
               {"rows", table.rows}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    const char* sep = flags.format == "csv" ? "," : "  ";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        std::cout << (i ? sep : "") << table.columns[i];
    std::cout << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? sep : "") << row[i];
        std::cout << "\n";
    }
}

Graph graph_from_flags(const std::string& g6, const std::string& family) {
    if (!g6.empty() && !family.empty())
        throw CLI::ValidationError("give either --g6 or --family, not both");
    if (!g6.empty()) return graph6_decode(g6);
    if (!family.empty()) return build_family(parse_family(family));
    throw CLI::ValidationError("a graph is required (--g6 or --family)");
}

int run(int argc, char** argv) {
    CLI::App app{"degree-power Turan numbers: constructions, detectors, "
                 "exact search, verification suites"};
    app.require_subcommand(1);
    CommonFlags flags;
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", flags.jobs, "parallel workers for search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--budget", flags.budget,
                   "maximum enumeration order for exhaustive search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a named graph");
    std::string construct_spec;
    c_construct->add_option("--family", construct_spec, "family spec string")
        ->required();

    // ep
    auto* c_ep = app.add_subcommand("ep", "degree power sum of a graph");
    std::string ep_g6, ep_family;
    unsigned ep_p = 2;
    c_ep->add_option("--g6", ep_g6, "graph6 string");
    c_ep->add_option("--family", ep_family, "family spec string");
    c_ep->add_option("--p", ep_p, "exponent")->required();

    // check
    auto* c_check = app.add_subcommand("check", "pattern-freeness of a graph");
    std::string check_g6, check_family, check_pattern;
    c_check->add_option("--g6", check_g6, "graph6 string");
    c_check->add_option("--family", check_family, "family spec string");
    c_check->add_option("--pattern", check_pattern, "pattern spec string")
        ->required();

    // search
    auto* c_search = app.add_subcommand(
        "search", "exact t_p(n,H) by isomorph-free exhaustive enumeration");
    int search_n = 0;
    unsigned search_p = 2;
    std::string search_pattern;
    c_search->add_option("--n", search_n, "number of vertices")->required();
    c_search->add_option("--pattern", search_pattern, "forbidden pattern")
        ->required();
    c_search->add_option("--p", search_p, "exponent")
        ->capture_default_str();
    c_search->add_option("--store", flags.store_path,
                         "results store JSON file to merge into");

    // optimize-multipartite
    auto* c_mp = app.add_subcommand(
        "optimize-multipartite",
        "exact t_p(n,K_k) over complete multipartite class sizes");
    int mp_n = 0, mp_k = 3;
    unsigned mp_p = 2;
    c_mp->add_option("--n", mp_n, "number of vertices")->required();
    c_mp->add_option("--k", mp_k, "forbidden clique order")->required();
    c_mp->add_option("--p", mp_p, "exponent")->capture_default_str();
    c_mp->add_option("--store", flags.store_path, "results store JSON file");

    // localsearch
    auto* c_ls = app.add_subcommand(
        "localsearch", "hill-climbing lower bound for t_p(n,H)");
    int ls_n = 0;
    unsigned ls_p = 2;
    std::string ls_pattern;
    LocalSearchConfig ls_cfg;
    c_ls->add_option("--n", ls_n, "number of vertices")->required();
    c_ls->add_option("--pattern", ls_pattern, "forbidden pattern")->required();
    c_ls->add_option("--p", ls_p, "exponent")->capture_default_str();
    c_ls->add_option("--seed", ls_cfg.seed, "master seed")
        ->capture_default_str();
    c_ls->add_option("--restarts", ls_cfg.restarts, "number of restarts")
        ->capture_default_str();
    c_ls->add_option("--steps", ls_cfg.step_budget, "accepted moves per restart")
        ->capture_default_str();
    c_ls->add_option("--store", flags.store_path, "results store JSON file");

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_id;
    c_verify->add_option("--suite", suite_id, "suite id (or 'all')")
        ->required();

    // probe
    auto* c_probe = app.add_subcommand("probe", "emit conjecture probe tables");
    std::string probe_name;
    int probe_nmin = 0, probe_nmax = 0, probe_k = 3;
    unsigned probe_p = 2;
    c_probe->add_option("--name", probe_name, "probe id")->required();
    c_probe->add_option("--n-min", probe_nmin, "smallest n")->required();
    c_probe->add_option("--n-max", probe_nmax, "largest n")->required();
    c_probe->add_option("--p", probe_p, "exponent")->capture_default_str();
    c_probe->add_option("--k", probe_k, "half cycle length for conjecture-6.4")
        ->capture_default_str();

    // table
    auto* c_table = app.add_subcommand("table", "export the results store");
    std::string table_store;
    c_table->add_option("--store", table_store, "results store JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*c_construct) {
            Graph g = build_family(parse_family(construct_spec));
            if (flags.format == "json") {
                json j{{"family", construct_spec},
                       {"n", g.order()},
                       {"edges", g.edge_count()},
                       {"g6", graph6_encode(g)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << graph6_encode(g) << "\n";
            }
        } else if (*c_ep) {
            Graph g = graph_from_flags(ep_g6, ep_family);
            std::cout << ep(g, ep_p).str() << "\n";
        } else if (*c_check) {
            Graph g = graph_from_flags(check_g6, check_family);
            Pattern pat = parse_pattern(check_pattern);
            bool free = is_pattern_free(g, pat);
            if (flags.format == "json") {
                json j{{"pattern", pat.to_string()},
                       {"g6", graph6_encode(g)},
                       {"free", free}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (free ? "free" : "contains") << "\n";
            }
        } else if (*c_search) {
            Pattern pat = parse_pattern(search_pattern);
            SearchResult res =
                exhaustive_tp(search_n, pat, search_p, options_from(flags));
            print_result(flags, pat.to_string(), search_n, search_p, res);
            store_result(flags, pat.to_string(), search_n, search_p, res);
        } else if (*c_mp) {
            MultipartiteResult res = multipartite_tp(mp_n, mp_k, mp_p);
            std::string pattern_text = "K" + std::to_string(mp_k);
            print_result(flags, pattern_text, mp_n, mp_p, res.result);
            if (flags.format == "text")
                for (const auto& parts : res.partitions) {
                    std::cout << "  parts";
                    for (int s : parts) std::cout << " " << s;
                    std::cout << "\n";
                }
            store_result(flags, pattern_text, mp_n, mp_p, res.result);
        } else if (*c_ls) {
            Pattern pat = parse_pattern(ls_pattern);
            SearchResult res = local_search_tp(ls_n, pat, ls_p, ls_cfg);
            print_result(flags, pat.to_string(), ls_n, ls_p, res);
            store_result(flags, pat.to_string(), ls_n, ls_p, res);
        } else if (*c_verify) {
            SuiteReport report =
                run_verification_suite(suite_id, options_from(flags));
            if (flags.format == "json") {
                json claims = json::array();
                for (const auto& c : report.claims)
                    claims.push_back(json{{"id", c.id},
                                          {"params", c.params},
                                          {"expected", c.expected},
                                          {"observed", c.observed},
                                          {"pass", c.pass}});
                json j{{"suite", report.name},
                       {"pass", report.pass},
                       {"claims", claims},
                       {"elapsed_seconds", report.elapsed_seconds}};
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& c : report.claims)
                    std::printf("%-4s %-34s %-28s expected=%s observed=%s\n",
                                c.pass ? "ok" : "FAIL", c.id.c_str(),
                                c.params.c_str(), c.expected.c_str(),
                                c.observed.c_str());
                std::printf("%s: %s (%zu claims, %.2fs)\n", report.name.c_str(),
                            report.pass ? "PASS" : "FAIL",
                            report.claims.size(), report.elapsed_seconds);
            }
            return report.pass ? kOk : kVerificationFailure;
        } else if (*c_probe) {
            ProbeTable table = probe_conjecture(probe_name, probe_nmin,
                                                probe_nmax, probe_p, probe_k,
                                                options_from(flags));
            print_table(flags, table);
        } else if (*c_table) {
            ResultsStore store = ResultsStore::load(table_store);
            if (flags.format == "json")
                std::cout << ResultsStore::to_json(store.records()) << "\n";
            else
                std::cout << ResultsStore::to_csv(store.records());
        }
        return kOk;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kComputationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputationError;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
