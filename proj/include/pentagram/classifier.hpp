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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pentagram/enumerator.hpp"
#include "pentagram/error.hpp"
#include "pentagram/polar_space.hpp"
#include "pentagram/table1.hpp"

namespace pentagram {

/// Per-context view of a pentagram: sign, Fano extension, and the extension's class.
struct ContextProfile {
    Context context;
    FanoPlane plane;

    std::array<Observable, 3> line_at_infinity() const {
        return context.line_at_infinity();
    }
};

inline std::array<ContextProfile, 5> context_profiles(const Pentagram &p) {
    std::array<ContextProfile, 5> out;
    for (std::size_t k = 0; k < p.contexts.size(); ++k) {
        out[k] = ContextProfile{p.contexts[k], extend_to_fano(p.contexts[k])};
    }
    return out;
}

inline TypeSignature signature(const Pentagram &p) {
    TypeSignature s;
    s.c_neg = p.negative_context_count;
    const KindCensus kinds = kind_census(p.points);
    s.o_a = kinds.a;
    s.o_b = kinds.b;
    s.o_c = kinds.c;
    for (const Context &c : p.contexts) {
        switch (extend_to_fano(c).plane_class) {
            case PlaneClass::Negative: ++s.f_neg; break;
            case PlaneClass::PositiveA: ++s.f_a; break;
            case PlaneClass::PositiveB: ++s.f_b; break;
            case PlaneClass::PositiveC: ++s.f_c; break;
        }
    }
    return s;
}

/// A computed atlas row. `k` counts pentagrams of this type lying on the Klein
/// quadric; `multiplicity` counts all pentagrams of this type and is not part
/// of the reference table.
struct AtlasRow {
    int t = 0;
    TypeSignature signature;
    int k = 0;
    int multiplicity = 0;

    bool operator==(const AtlasRow &) const = default;
};

struct Atlas {
    /// One row per reference type, in reference order.
    std::vector<AtlasRow> rows;
    /// Type index of each input pentagram, parallel to the input list.
    std::vector<int> type_of;

    const AtlasRow &row(int t) const {
        return rows.at(static_cast<std::size_t>(t - 1));
    }
};

/// Raised by build_atlas when the computed signatures and the reference table
/// disagree. `diff` holds one human-readable line per discrepancy.
class AtlasMismatch : public Error {
   public:
    AtlasMismatch(ErrorCode code, std::vector<std::string> diff)
        : Error(code, join(diff)), diff_(std::move(diff)) {
    }

    const std::vector<std::string> &diff() const {
        return diff_;
    }

   private:
    static std::string join(const std::vector<std::string> &lines) {
        std::string out;
        for (const auto &l : lines) {
            out += (out.empty() ? "" : "; ") + l;
        }
        return out;
    }

    std::vector<std::string> diff_;
};

inline std::vector<TypeSignature> signatures(std::span<const Pentagram> all) {
    std::vector<TypeSignature> out;
    out.reserve(all.size());
    for (const Pentagram &p : all) {
        out.push_back(signature(p));
    }
    return out;
}

/// Groups pentagrams by signature and matches the groups one-to-one against
/// the reference table. Type indices come from the table; they are never
/// re-derived from the data.
inline Atlas build_atlas(std::span<const Pentagram> all, const GoldenTable &golden = table1()) {
    std::map<TypeSignature, int> golden_index;
    for (std::size_t r = 0; r < golden.size(); ++r) {
        golden_index.emplace(golden[r].signature, static_cast<int>(r));
    }

    Atlas atlas;
    for (const GoldenRow &g : golden) {
        atlas.rows.push_back(AtlasRow{g.t, g.signature, 0, 0});
    }

    std::map<TypeSignature, int> unknown;
    atlas.type_of.reserve(all.size());
    for (const Pentagram &p : all) {
        const TypeSignature s = signature(p);
        auto it = golden_index.find(s);
        if (it == golden_index.end()) {
            ++unknown[s];
            atlas.type_of.push_back(0);
            continue;
        }
        AtlasRow &row = atlas.rows[static_cast<std::size_t>(it->second)];
        atlas.type_of.push_back(row.t);
        ++row.multiplicity;
        if (on_quadric(p.mask())) {
            ++row.k;
        }
    }

    // Pair each unmatched computed signature with the closest unrealized
    // reference row so an edited cell shows up as one cell-level line.
    std::vector<std::string> diff;
    std::vector<AtlasRow *> unrealized;
    for (AtlasRow &row : atlas.rows) {
        if (row.multiplicity == 0) {
            unrealized.push_back(&row);
        }
    }
    for (const auto &[s, n] : unknown) {
        auto best = unrealized.end();
        int best_distance = 9;
        for (auto it = unrealized.begin(); it != unrealized.end(); ++it) {
            int d = 0;
            for (std::size_t c = 0; c < 8; ++c) {
                d += s.values()[c] != (*it)->signature.values()[c] ? 1 : 0;
            }
            if (d < best_distance) {
                best_distance = d;
                best = it;
            }
        }
        if (best == unrealized.end()) {
            diff.push_back("computed signature " + s.str() + " (" + std::to_string(n) + " pentagrams) is not in the reference table");
            continue;
        }
        const AtlasRow &row = **best;
        for (std::size_t c = 0; c < 8; ++c) {
            if (s.values()[c] != row.signature.values()[c]) {
                diff.push_back("type " + std::to_string(row.t) + " " + std::string(kSignatureColumns[c]) + ": reference " +
                               std::to_string(row.signature.values()[c]) + ", computed " + std::to_string(s.values()[c]));
            }
        }
        unrealized.erase(best);
    }
    for (const AtlasRow *row : unrealized) {
        diff.push_back("reference type " + std::to_string(row->t) + " " + row->signature.str() + " is never realized");
    }
    if (!diff.empty()) {
        throw AtlasMismatch(unknown.empty() ? ErrorCode::MissingType : ErrorCode::UnknownSignature, std::move(diff));
    }
    return atlas;
}

struct KleinCensus {
    /// Quadric pentagram count per type, index t - 1.
    std::vector<int> k_by_type;
    int total = 0;
    /// Types with K > 0.
    std::vector<int> realized;
    /// Types with K = 0.
    std::vector<int> missing;
    /// One line per type whose count differs from the reference K column.
    std::vector<std::string> mismatches;

    bool matches_reference() const {
        return mismatches.empty();
    }
};

/// Per-type counts of the pentagrams lying on the Klein quadric, compared
/// against the reference K column.
inline KleinCensus klein_census(const Atlas &atlas, std::span<const Pentagram> quadric_pentagrams,
                                const GoldenTable &golden = table1()) {
    std::map<TypeSignature, int> type_by_signature;
    for (const AtlasRow &row : atlas.rows) {
        type_by_signature.emplace(row.signature, row.t);
    }
    KleinCensus census;
    census.k_by_type.assign(atlas.rows.size(), 0);
    for (const Pentagram &p : quadric_pentagrams) {
        const TypeSignature s = signature(p);
        auto it = type_by_signature.find(s);
        if (it == type_by_signature.end()) {
            census.mismatches.push_back("quadric pentagram with unmatched signature " + s.str());
            continue;
        }
        ++census.k_by_type[static_cast<std::size_t>(it->second - 1)];
        ++census.total;
    }
    for (std::size_t r = 0; r < atlas.rows.size(); ++r) {
        const int t = atlas.rows[r].t;
        (census.k_by_type[r] > 0 ? census.realized : census.missing).push_back(t);
        if (r < golden.size() && golden[r].k != census.k_by_type[r]) {
            census.mismatches.push_back("type " + std::to_string(t) + " K: reference " + std::to_string(golden[r].k) +
                                        ", computed " + std::to_string(census.k_by_type[r]));
        }
    }
    return census;
}

/// Lookup structure over the full pentagram list: position by pentagram, and
/// pentagrams by each unordered pair of their contexts.
class PentagramIndex {
   public:
    explicit PentagramIndex(std::span<const Pentagram> all) : all_(all) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::uint64_t key : pair_keys(all[i])) {
                by_pair_[key].push_back(i);
            }
        }
    }

    std::optional<std::size_t> find(const Pentagram &p) const {
        auto it = std::lower_bound(all_.begin(), all_.end(), p);
        if (it == all_.end() || *it != p) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - all_.begin());
    }

    /// Indices of the pentagrams other than p sharing exactly two of its contexts.
    std::vector<std::size_t> two_edge_neighbor_indices(const Pentagram &p) const {
        std::set<std::size_t> seen;
        std::vector<std::size_t> out;
        for (std::uint64_t key : pair_keys(p)) {
            auto it = by_pair_.find(key);
            if (it == by_pair_.end()) {
                continue;
            }
            for (std::size_t i : it->second) {
                if (all_[i] != p && all_[i].shared_contexts(p) == 2 && seen.insert(i).second) {
                    out.push_back(i);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Pentagram> two_edge_neighbors(const Pentagram &p) const {
        std::vector<Pentagram> out;
        for (std::size_t i : two_edge_neighbor_indices(p)) {
            out.push_back(all_[i]);
        }
        return out;
    }

    std::span<const Pentagram> all() const {
        return all_;
    }

   private:
    static std::array<std::uint64_t, 10> pair_keys(const Pentagram &p) {
        std::array<std::uint64_t, 10> keys{};
        std::size_t n = 0;
        for (std::size_t i = 0; i < p.contexts.size(); ++i) {
            for (std::size_t j = i + 1; j < p.contexts.size(); ++j) {
                keys[n++] = (std::uint64_t{p.contexts[i].key()} << 32) | p.contexts[j].key();
            }
        }
        return keys;
    }

    std::span<const Pentagram> all_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_pair_;
};

inline std::vector<Pentagram> two_edge_neighbors(const Pentagram &p, std::span<const Pentagram> all) {
    return PentagramIndex(all).two_edge_neighbors(p);
}

struct ContextKind {
    Sign sign = Sign::Positive;
    PlaneClass plane_class = PlaneClass::Negative;

    auto operator<=>(const ContextKind &) const = default;

    std::string str() const {
        return std::string(sign == Sign::Negative ? "-" : "+") + "/" + std::string(plane_class_name(plane_class));
    }
};

inline ContextKind context_kind(const Context &c) {
    return ContextKind{c.sign, extend_to_fano(c).plane_class};
}

/// Every (sign, plane class) pair realized by a context of some pentagram.
inline std::set<ContextKind> context_kind_census(std::span<const Pentagram> all) {
    std::set<ContextKind> out;
    for (const Pentagram &p : all) {
        for (const Context &c : p.contexts) {
            out.insert(context_kind(c));
        }
    }
    return out;
}

}  // namespace pentagram
