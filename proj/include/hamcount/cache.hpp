#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hamcount/composition.hpp"
#include "hamcount/count.hpp"

namespace hamcount::cache {

inline constexpr const char* kToolVersion = "hamcount 0.1.0";

struct CacheRecord {
    std::string kind;                 // S, H, H_directed, W, F, necklace
    std::vector<int> parts;           // stored sorted (counts are symmetric)
    std::optional<std::pair<int, int>> endpoints;  // user order, F only
    std::string value;                // decimal string
    std::string tool_version = kToolVersion;
};

using Key = std::tuple<std::string, std::vector<int>, std::optional<std::pair<int, int>>>;

inline Key key_of(const CacheRecord& r) { return {r.kind, r.parts, r.endpoints}; }

inline Key make_key(const std::string& kind, const Composition& parts,
                    std::optional<std::pair<int, int>> endpoints = std::nullopt) {
    return {kind, parts.sorted_key(), endpoints};
}

// Line-delimited JSON, append-only; duplicate keys resolve newest-wins.
// Corrupt lines are skipped with a warning, never fatal.
inline std::map<Key, CacheRecord> read(const std::string& path) {
    std::map<Key, CacheRecord> records;
    std::ifstream in(path);
    if (!in) return records;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            CacheRecord r;
            r.kind = j.at("kind").get<std::string>();
            r.parts = j.at("parts").get<std::vector<int>>();
            if (j.contains("endpoints") && !j["endpoints"].is_null()) {
                auto e = j["endpoints"].get<std::vector<int>>();
                if (e.size() != 2) throw std::invalid_argument("endpoints needs two colors");
                r.endpoints = {e[0], e[1]};
            }
            r.value = j.at("value").get<std::string>();
            Count::from_string(r.value);  // malformed decimal -> skip line
            if (j.contains("tool_version")) r.tool_version = j["tool_version"].get<std::string>();
            records[key_of(r)] = std::move(r);
        } catch (const std::exception& e) {
            std::cerr << "warning: " << path << ":" << lineno
                      << ": skipping corrupt cache line (" << e.what() << ")\n";
        }
    }
    return records;
}

inline void append(const std::string& path, const CacheRecord& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    nlohmann::json j;
    j["kind"] = r.kind;
    j["parts"] = r.parts;
    if (r.endpoints) j["endpoints"] = std::vector<int>{r.endpoints->first, r.endpoints->second};
    j["value"] = r.value;
    j["tool_version"] = r.tool_version;
    out << j.dump() << '\n';
}

}  // namespace hamcount::cache
