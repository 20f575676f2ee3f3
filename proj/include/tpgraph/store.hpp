#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpgraph/search.hpp"

namespace tpg {

inline constexpr const char* kToolVersion = "tpgraph 0.1.0";

// One persisted search outcome, keyed by (pattern, n, p).
struct StoreRecord {
    std::string pattern;
    int n = 0;
    unsigned p = 1;
    std::string value;  // exact decimal string
    std::vector<std::string> witnesses;  // graph6
    bool exhaustive = false;
    std::uint64_t enumerated = 0;
    std::string tool_version = kToolVersion;
};

StoreRecord make_record(const std::string& pattern_text, int n, unsigned p,
                        const SearchResult& result);

class ResultsStore {
public:
    // Missing file loads as an empty store.
    static ResultsStore load(const std::string& path);
    void save(const std::string& path) const;

    // Keeps the maximum-information record per key: exhaustive beats
    // lower-bound, then larger value, then more witnesses.
    void merge(const StoreRecord& record);

    const std::vector<StoreRecord>& records() const { return records_; }
    std::optional<StoreRecord> find(const std::string& pattern, int n,
                                    unsigned p) const;

    static std::string to_json(const std::vector<StoreRecord>& records);
    static std::vector<StoreRecord> from_json(const std::string& text);

    // Fixed column order: pattern, n, p, value, exhaustive, witness_count,
    // first_witness_g6.
    static std::string to_csv(const std::vector<StoreRecord>& records);

private:
    std::vector<StoreRecord> records_;  // kept sorted by (pattern, n, p)
};

}  // namespace tpg
