#pragma once
// On-disk cache for computed correlator tables. The format is a single
// JSON document:
//
//   {
//     "version": 1,
//     "entries": {
//       "g,n": [ { "k": [exponents...],
//                  "coeff": { "terms": [ {"exp": e, "num": "...",
//                                         "den": "..."} ] } }, ... ]
//     }
//   }
//
// Numerators and denominators are base-10 strings so arbitrary precision
// survives the round trip. Writes go through a temporary file and a
// rename so a crash cannot leave a half-written cache; any malformed
// document is rejected as a whole.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "toprec/coeff.hpp"
#include "toprec/errors.hpp"
#include "toprec/recursion.hpp"

namespace toprec {

inline constexpr int cache_format_version = 1;

inline nlohmann::json cache_to_json(const WStore& store) {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [gn, table] : store.tables()) {
        const std::string key = std::to_string(gn.first) + "," + std::to_string(gn.second);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [k, c] : table.terms()) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [exp, r] : c.elem().terms())
                terms.push_back({{"exp", exp}, {"num", r.num_str()}, {"den", r.den_str()}});
            rows.push_back({{"k", k}, {"coeff", {{"terms", std::move(terms)}}}});
        }
        entries[key] = std::move(rows);
    }
    return nlohmann::json{{"version", cache_format_version}, {"entries", std::move(entries)}};
}

inline void cache_save(const WStore& store, const std::filesystem::path& path) {
    const nlohmann::json doc = cache_to_json(store);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw io_error("cache_save: cannot open '" + tmp.string() + "' for writing");
        out << doc.dump(1) << "\n";
        if (!out) throw io_error("cache_save: write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw io_error("cache_save: rename to '" + path.string() + "' failed: " + ec.message());
}

inline void cache_load(WStore& store, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cache_load: cannot open '" + path.string() + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("cache_load: '" + path.string() + "' is not valid JSON: " + e.what());
    }
    try {
        if (!doc.is_object() || doc.at("version").get<int>() != cache_format_version)
            throw io_error("cache_load: unsupported cache version");
        for (const auto& [key, rows] : doc.at("entries").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos)
                throw io_error("cache_load: malformed entry key '" + key + "'");
            const int g = std::stoi(key.substr(0, comma));
            const int n = std::stoi(key.substr(comma + 1));
            SymTable table(n);
            for (const auto& row : rows) {
                SymKey k = row.at("k").get<SymKey>();
                CoeffElem e;
                for (const auto& term : row.at("coeff").at("terms"))
                    e.add_term(term.at("exp").get<int>(),
                               BigRational::from_parts(term.at("num").get<std::string>(),
                                                       term.at("den").get<std::string>()));
                table.insert_checked(k, CoeffFrac(e));
            }
            store.put(g, n, std::move(table));
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error("cache_load: '" + path.string() + "' has unexpected shape: " + e.what());
    } catch (const domain_error& e) {
        // Guards inside SymTable and WStore signal a caller mistake when hit
        // directly; coming from a cache file they mean the document is corrupt.
        throw consistency_error("cache_load: '" + path.string() + "' holds an inconsistent table: " + e.what());
    } catch (const std::invalid_argument&) {
        throw io_error("cache_load: malformed integer in '" + path.string() + "'");
    } catch (const std::out_of_range&) {
        throw io_error("cache_load: integer out of range in '" + path.string() + "'");
    }
}

} // namespace toprec
