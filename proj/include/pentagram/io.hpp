// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <openssl/evp.h>

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentagram/classifier.hpp"
#include "pentagram/enumerator.hpp"
#include "pentagram/error.hpp"
#include "pentagram/polar_space.hpp"

namespace pentagram {

using json = nlohmann::json;

// ---------------------------------------------------------------- records

template <class Range>
json ids_json(const Range &points) {
    json out = json::array();
    for (Observable o : points) {
        out.push_back(o.id());
    }
    return out;
}

template <class Range>
json labels_json(const Range &points) {
    json out = json::array();
    for (Observable o : points) {
        out.push_back(o.label());
    }
    return out;
}

inline json to_json(const Context &c) {
    return json{{"points", ids_json(c.points)}, {"labels", labels_json(c.points)}, {"sign", to_int(c.sign)}};
}

inline json to_json(const FanoPlane &p) {
    return json{{"points", ids_json(p.points)},
                {"labels", labels_json(p.points)},
                {"sign", to_int(p.sign)},
                {"class", std::string(plane_class_name(p.plane_class))}};
}

namespace detail {

inline Observable observable_from_json(const json &j) {
    if (j.is_number_integer()) {
        return Observable::from_id(j.get<int>());
    }
    if (j.is_string()) {
        return Observable::parse(j.get<std::string>());
    }
    throw Error(ErrorCode::MalformedLabel, "observable must be an id or a label, got " + j.dump());
}

}  // namespace detail

inline Context context_from_json(const json &j) {
    const json &pts = j.is_object() ? j.at("points") : j;
    if (!pts.is_array() || pts.size() != 4) {
        throw Error(ErrorCode::MalformedLabel, "a context needs 4 points, got " + pts.dump());
    }
    Context c = make_context({detail::observable_from_json(pts[0]), detail::observable_from_json(pts[1]),
                              detail::observable_from_json(pts[2]), detail::observable_from_json(pts[3])});
    if (j.is_object() && j.contains("sign") && j.at("sign").get<int>() != to_int(c.sign)) {
        throw Error(ErrorCode::ProductNotScalar, "recorded sign disagrees with {" + c.str() + "}");
    }
    return c;
}

inline FanoPlane plane_from_json(const json &j) {
    const json &pts = j.at("points");
    if (!pts.is_array() || pts.size() != 7) {
        throw Error(ErrorCode::NotASubspace, "a Fano plane needs 7 points, got " + pts.dump());
    }
    std::array<Observable, 7> points;
    for (std::size_t k = 0; k < 7; ++k) {
        points[k] = detail::observable_from_json(pts[k]);
    }
    FanoPlane p = make_plane(points);
    if (j.contains("sign") && j.at("sign").get<int>() != to_int(p.sign)) {
        throw Error(ErrorCode::UnclassifiablePlane, "recorded sign disagrees with plane {" + p.str() + "}");
    }
    if (j.contains("class") && plane_class_from_name(j.at("class").get<std::string>()) != p.plane_class) {
        throw Error(ErrorCode::UnclassifiablePlane, "recorded class disagrees with plane {" + p.str() + "}");
    }
    return p;
}

/// Compact pentagram record: {"contexts": [[4 ids] x5], "neg": n}.
inline json to_json(const Pentagram &p) {
    json contexts = json::array();
    for (const Context &c : p.contexts) {
        contexts.push_back(ids_json(c.points));
    }
    return json{{"contexts", contexts}, {"neg", p.negative_context_count}};
}

/// Inverse of to_json(Pentagram); every invariant is re-validated.
inline Pentagram pentagram_from_json(const json &j) {
    const json &cs = j.at("contexts");
    if (!cs.is_array() || cs.size() != kContextsPerPentagram) {
        throw Error(ErrorCode::BadIntersection, "a pentagram record needs 5 contexts");
    }
    std::array<Context, 5> contexts;
    for (std::size_t k = 0; k < contexts.size(); ++k) {
        contexts[k] = context_from_json(cs[k]);
    }
    Pentagram p = validate_pentagram(contexts);
    if (j.contains("neg") && j.at("neg").get<int>() != p.negative_context_count) {
        throw Error(ErrorCode::EvenParity, "recorded negative-context count disagrees with the contexts");
    }
    return p;
}

// ---------------------------------------------------------------- atlas

inline constexpr const char *kAtlasCsvHeader = "T,C-,O_A,O_B,O_C,F-,F+a,F+b,F+c,K,N";

inline std::string atlas_csv_row(const AtlasRow &row) {
    std::string out = std::to_string(row.t);
    for (int v : row.signature.values()) {
        out += "," + std::to_string(v);
    }
    return out + "," + std::to_string(row.k) + "," + std::to_string(row.multiplicity);
}

inline void write_atlas_csv(std::ostream &out, std::span<const AtlasRow> rows) {
    out << kAtlasCsvHeader << "\n";
    for (const AtlasRow &row : rows) {
        out << atlas_csv_row(row) << "\n";
    }
}

/// Atlas row as JSON. N is flagged as derived: it is computed here and has no
/// counterpart in the reference table.
inline json to_json(const AtlasRow &row) {
    const TypeSignature &s = row.signature;
    return json{{"T", row.t},      {"C-", s.c_neg},  {"O_A", s.o_a},  {"O_B", s.o_b}, {"O_C", s.o_c},
                {"F-", s.f_neg},   {"F+a", s.f_a},   {"F+b", s.f_b},  {"F+c", s.f_c}, {"K", row.k},
                {"N", json{{"value", row.multiplicity}, {"derived", true}}}};
}

inline AtlasRow atlas_row_from_json(const json &j) {
    AtlasRow row;
    row.t = j.at("T").get<int>();
    row.signature = TypeSignature{j.at("C-").get<int>(),  j.at("O_A").get<int>(), j.at("O_B").get<int>(),
                                  j.at("O_C").get<int>(), j.at("F-").get<int>(),  j.at("F+a").get<int>(),
                                  j.at("F+b").get<int>(), j.at("F+c").get<int>()};
    row.k = j.at("K").get<int>();
    const json &n = j.at("N");
    row.multiplicity = n.is_object() ? n.at("value").get<int>() : n.get<int>();
    return row;
}

// ---------------------------------------------------------------- cache

inline constexpr const char *kCacheFile = "pentagrams.json";
inline constexpr const char *kCacheMetaFile = "pentagrams.meta.json";

inline std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::BadCache, "SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(kHex[digest[k] >> 4]);
        out.push_back(kHex[digest[k] & 15]);
    }
    return out;
}

/// One record per line so that cache files diff cleanly.
inline std::string serialize_pentagrams(std::span<const Pentagram> all) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        out += to_json(all[i]).dump();
        out += i + 1 < all.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

inline std::map<int, int> family_sizes(std::span<const Pentagram> all) {
    std::map<int, int> out{{1, 0}, {3, 0}, {5, 0}};
    for (const Pentagram &p : all) {
        ++out[p.negative_context_count];
    }
    return out;
}

inline json cache_meta(std::span<const Pentagram> all, const std::string &sha) {
    json families = json::object();
    for (const auto &[neg, n] : family_sizes(all)) {
        families[std::to_string(neg)] = n;
    }
    return json{{"format", 1}, {"count", all.size()}, {"families", families}, {"sha256", sha}};
}

namespace detail {

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::BadCache, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path &path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::BadCache, "cannot write " + path.string());
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace detail

inline void write_cache(const std::filesystem::path &dir, std::span<const Pentagram> all) {
    std::filesystem::create_directories(dir);
    const std::string body = serialize_pentagrams(all);
    detail::write_file(dir / kCacheFile, body);
    detail::write_file(dir / kCacheMetaFile, cache_meta(all, sha256_hex(body)).dump(2) + "\n");
}

/// Reads and fully re-validates a cache directory. Throws BadCache on any
/// missing file, hash mismatch, or malformed record.
inline std::vector<Pentagram> read_cache(const std::filesystem::path &dir) {
    const auto body_path = dir / kCacheFile;
    const auto meta_path = dir / kCacheMetaFile;
    if (!std::filesystem::exists(body_path) || !std::filesystem::exists(meta_path)) {
        throw Error(ErrorCode::BadCache, "cache files absent in " + dir.string());
    }
    const std::string body = detail::read_file(body_path);
    json meta;
    try {
        meta = json::parse(detail::read_file(meta_path));
    } catch (const json::exception &e) {
        throw Error(ErrorCode::BadCache, std::string("unreadable metadata: ") + e.what());
    }
    if (!meta.contains("sha256") || meta.at("sha256") != sha256_hex(body)) {
        throw Error(ErrorCode::BadCache, "content hash mismatch");
    }
    std::vector<Pentagram> out;
    try {
        const json records = json::parse(body);
        out.reserve(records.size());
        for (const json &r : records) {
            out.push_back(pentagram_from_json(r));
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::BadCache, std::string("malformed cache: ") + e.what());
    } catch (const Error &e) {
        throw Error(ErrorCode::BadCache, std::string("invalid record: ") + e.what());
    }
    if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end() ||
        meta.value("count", json(-1)) != json(out.size())) {
        throw Error(ErrorCode::BadCache, "records out of order, duplicated, or miscounted");
    }
    return out;
}

enum class CacheStatus { Hit, Created, Regenerated };

constexpr std::string_view cache_status_name(CacheStatus s) {
    switch (s) {
        case CacheStatus::Hit: return "hit";
        case CacheStatus::Created: return "created";
        case CacheStatus::Regenerated: return "regenerated";
    }
    return "?";
}

struct CacheLoad {
    std::vector<Pentagram> pentagrams;
    CacheStatus status = CacheStatus::Hit;
    std::string reason;
};

/// Loads the cache, enumerating (and rewriting the cache) when it is absent
/// or fails validation.
inline CacheLoad load_or_enumerate(const std::filesystem::path &dir, EnumerationOptions options = {}) {
    const bool present = std::filesystem::exists(dir / kCacheFile) || std::filesystem::exists(dir / kCacheMetaFile);
    CacheLoad out;
    if (present) {
        try {
            out.pentagrams = read_cache(dir);
            out.status = CacheStatus::Hit;
            return out;
        } catch (const Error &e) {
            out.reason = e.what();
        }
    }
    out.status = present ? CacheStatus::Regenerated : CacheStatus::Created;
    out.pentagrams = enumerate_pentagrams(options);
    write_cache(dir, out.pentagrams);
    return out;
}

}  // namespace pentagram
