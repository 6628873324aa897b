#include "mtab/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

#include <json.hpp>

namespace mtab {

namespace {

using nlohmann::json;

constexpr int kCacheFormatVersion = 1;

std::shared_mutex g_mutex;
std::string g_dir;
std::map<std::string, std::shared_ptr<const LabeledModule>> g_memo;

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json module_to_json(const LabeledModule& m) {
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["side"] = m.weyl ? "weyl" : "schur";
    j["shape"] = m.shape.to_string();
    j["n"] = m.n;
    j["convention"] = "rows-strict-semistandard";
    json labels = json::array();
    for (auto& T : m.labels) {
        json rows = json::array();
        for (auto& row : T.entries) rows.push_back(row);
        labels.push_back(rows);
    }
    j["labels"] = labels;
    json vecs = json::array();
    for (auto& v : m.vectors) {
        json terms = json::array();
        for (auto& [idx, c] : v.t) terms.push_back({idx, rat_str(c)});
        vecs.push_back(terms);
    }
    j["vectors"] = vecs;
    return j;
}

std::shared_ptr<const LabeledModule> module_from_json(const json& j, const SkewShape& shape,
                                                     int n, bool weyl) {
    if (j.at("format_version").get<int>() != kCacheFormatVersion) return nullptr;
    if (j.at("side").get<std::string>() != (weyl ? "weyl" : "schur")) return nullptr;
    if (j.at("shape").get<std::string>() != shape.to_string()) return nullptr;
    if (j.at("n").get<int>() != n) return nullptr;
    std::vector<Tableau> labels;
    for (auto& rows : j.at("labels")) {
        Tableau T;
        T.shape = shape;
        for (auto& row : rows) T.entries.push_back(row.get<std::vector<int>>());
        labels.push_back(std::move(T));
    }
    std::vector<SparseVec> vectors;
    for (auto& terms : j.at("vectors")) {
        SparseVec v;
        for (auto& term : terms)
            v.t.emplace_back(term.at(0).get<int>(), rat_parse(term.at(1).get<std::string>()));
        vectors.push_back(std::move(v));
    }
    // assemble_module re-checks the labels against a fresh enumeration and
    // refactors the stratum solvers, so stale files surface immediately.
    return assemble_module(shape, n, weyl, std::move(labels), std::move(vectors));
}

std::shared_ptr<const LabeledModule> get_module(const SkewShape& shape, int n, bool weyl) {
    std::string key = module_cache_key(shape, n, weyl);
    {
        std::shared_lock lk(g_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    std::string dir;
    {
        std::shared_lock lk(g_mutex);
        dir = g_dir;
    }
    std::shared_ptr<const LabeledModule> mod;
    std::filesystem::path file;
    if (!dir.empty()) {
        file = std::filesystem::path(dir) / (key + ".json");
        std::ifstream in(file);
        if (in) {
            try {
                json j;
                in >> j;
                mod = module_from_json(j, shape, n, weyl);
            } catch (...) {
                mod = nullptr;  // corrupt cache entries are rebuilt
            }
        }
    }
    if (!mod) {
        mod = weyl ? build_weyl_module(shape, n) : build_schur_module(shape, n);
        if (!dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            auto tmp = file;
            tmp += ".tmp";
            {
                std::ofstream out(tmp);
                out << module_to_json(*mod);
            }
            std::filesystem::rename(tmp, file, ec);  // atomic publish
        }
    }
    std::unique_lock lk(g_mutex);
    auto [it, inserted] = g_memo.emplace(key, mod);
    return it->second;
}

}  // namespace

void set_module_cache_dir(const std::string& dir) {
    std::unique_lock lk(g_mutex);
    g_dir = dir;
}

std::string module_cache_dir() {
    std::shared_lock lk(g_mutex);
    return g_dir;
}

std::string module_cache_key(const SkewShape& shape, int n, bool weyl) {
    std::string tag = std::string(weyl ? "weyl" : "schur") + "|" + shape.to_string() + "|n=" +
                      std::to_string(n) + "|v" + std::to_string(kCacheFormatVersion) +
                      "|rows-strict";
    return fnv1a(tag);
}

void clear_module_memo() {
    std::unique_lock lk(g_mutex);
    g_memo.clear();
}

std::shared_ptr<const LabeledModule> cached_schur_module(const SkewShape& shape, int n) {
    return get_module(shape, n, false);
}

std::shared_ptr<const LabeledModule> cached_weyl_module(const SkewShape& shape, int n) {
    return get_module(shape, n, true);
}

RatVec straighten(const SkewShape& shape, int n, const Tableau& T) {
    return straighten(*cached_schur_module(shape, n), T);
}

}  // namespace mtab
