#include "tpgraph/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace tpg {

using nlohmann::json;

StoreRecord make_record(const std::string& pattern_text, int n, unsigned p,
                        const SearchResult& result) {
    StoreRecord rec;
    rec.pattern = pattern_text;
    rec.n = n;
    rec.p = p;
    rec.value = result.value.str();
    for (const CanonicalKey& key : result.witnesses)
        rec.witnesses.push_back(graph6_encode(graph_from_key(key)));
    rec.exhaustive = result.exhaustive;
    rec.enumerated = result.enumerated;
    return rec;
}

namespace {

auto record_key(const StoreRecord& r) { return std::tie(r.pattern, r.n, r.p); }

// (exhaustive, numeric value, witness count) decides which record carries
// more information
bool carries_more_information(const StoreRecord& a, const StoreRecord& b) {
    if (a.exhaustive != b.exhaustive) return a.exhaustive;
    BigInt va(a.value), vb(b.value);
    if (va != vb) return va > vb;
    return a.witnesses.size() > b.witnesses.size();
}

json record_to_json(const StoreRecord& r) {
    return json{{"pattern", r.pattern},       {"n", r.n},
                {"p", r.p},                   {"value", r.value},
                {"witnesses", r.witnesses},   {"exhaustive", r.exhaustive},
                {"enumerated", r.enumerated}, {"tool_version", r.tool_version}};
}

StoreRecord record_from_json(const json& j) {
    StoreRecord r;
    r.pattern = j.at("pattern").get<std::string>();
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<unsigned>();
    r.value = j.at("value").get<std::string>();
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.enumerated = j.at("enumerated").get<std::uint64_t>();
    r.tool_version = j.value("tool_version", std::string(kToolVersion));
    return r;
}

}  // namespace

ResultsStore ResultsStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::stringstream buf;
    buf << in.rdbuf();
    ResultsStore store;
    store.records_ = from_json(buf.str());
    std::sort(store.records_.begin(), store.records_.end(),
              [](const StoreRecord& a, const StoreRecord& b) {
                  return record_key(a) < record_key(b);
              });
    return store;
}

void ResultsStore::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write results store: " + path);
    out << to_json(records_) << "\n";
}

void ResultsStore::merge(const StoreRecord& record) {
    auto it = std::lower_bound(records_.begin(), records_.end(), record,
                               [](const StoreRecord& a, const StoreRecord& b) {
                                   return record_key(a) < record_key(b);
                               });
    if (it != records_.end() && record_key(*it) == record_key(record)) {
        if (carries_more_information(record, *it)) *it = record;
    } else {
        records_.insert(it, record);
    }
}

std::optional<StoreRecord> ResultsStore::find(const std::string& pattern,
                                              int n, unsigned p) const {
    for (const auto& r : records_)
        if (r.pattern == pattern && r.n == n && r.p == p) return r;
    return std::nullopt;
}

std::string ResultsStore::to_json(const std::vector<StoreRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2);
}

std::vector<StoreRecord> ResultsStore::from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array())
        throw std::runtime_error("results store must be a JSON array");
    std::vector<StoreRecord> out;
    for (const auto& j : arr) out.push_back(record_from_json(j));
    return out;
}

std::string ResultsStore::to_csv(const std::vector<StoreRecord>& records) {
    std::string out =
        "pattern,n,p,value,exhaustive,witness_count,first_witness_g6\n";
    for (const auto& r : records) {
        out += r.pattern + "," + std::to_string(r.n) + "," +
               std::to_string(r.p) + "," + r.value + "," +
               (r.exhaustive ? "true" : "false") + "," +
               std::to_string(r.witnesses.size()) + "," +
               (r.witnesses.empty() ? "" : r.witnesses.front()) + "\n";
    }
    return out;
}

}  // namespace tpg
