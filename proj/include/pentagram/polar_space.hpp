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
#include <bit>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentagram/error.hpp"
#include "pentagram/pauli.hpp"

namespace pentagram {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign sign_of(Phase phase) {
    return phase.sign() < 0 ? Sign::Negative : Sign::Positive;
}

constexpr int to_int(Sign s) {
    return static_cast<int>(s);
}

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Positive : Sign::Negative;
}

namespace detail {

// Sign of a product of pairwise commuting observables that multiply to a scalar.
inline Sign scalar_sign(std::span<const Observable> points) {
    const SignedProduct p = signed_product(points);
    if (!p.is_identity()) {
        throw Error(ErrorCode::ProductNotScalar, "points do not multiply to +-III");
    }
    if (!p.phase.is_real()) {
        // Unreachable for commuting Hermitian sets; kept as a hard check.
        throw Error(ErrorCode::NonCommuting, "imaginary product phase");
    }
    return sign_of(p.phase);
}

template <std::size_t N>
std::string join_labels(const std::array<Observable, N> &points) {
    std::string out;
    for (std::size_t k = 0; k < N; ++k) {
        out += (k ? " " : "") + points[k].label();
    }
    return out;
}

template <std::size_t N>
void require_distinct_commuting(const std::array<Observable, N> &sorted) {
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (sorted[i] == sorted[i + 1]) {
            throw Error(ErrorCode::DuplicatePoint, "repeated point " + sorted[i].label());
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) {
            if (!commute(sorted[i], sorted[j])) {
                throw Error(ErrorCode::NonCommuting, sorted[i].label() + " and " + sorted[j].label() + " anticommute");
            }
        }
    }
}

}  // namespace detail

/// A totally isotropic line {a, b, a+b}, points in ascending id order.
struct IsotropicLine {
    std::array<Observable, 3> points;
    Sign sign = Sign::Positive;

    PointMask mask() const {
        return mask_of(points);
    }
    bool contains(Observable o) const {
        return (mask() & mask_of(o)) != 0;
    }
    auto operator<=>(const IsotropicLine &other) const {
        return points <=> other.points;
    }
    bool operator==(const IsotropicLine &other) const {
        return points == other.points;
    }
};

inline IsotropicLine make_line(Observable a, Observable b) {
    if (a == b) {
        throw Error(ErrorCode::DegeneratePair, "a line needs two distinct points, got " + a.label() + " twice");
    }
    if (!commute(a, b)) {
        throw Error(ErrorCode::NonCommuting, a.label() + " and " + b.label() + " anticommute");
    }
    std::array<Observable, 3> pts{a, b, a + b};
    std::sort(pts.begin(), pts.end());
    return IsotropicLine{pts, detail::scalar_sign(pts)};
}

/// Four pairwise commuting points summing to zero: an affine plane of order two.
struct Context {
    std::array<Observable, 4> points;
    Sign sign = Sign::Positive;

    PointMask mask() const {
        return mask_of(points);
    }
    bool contains(Observable o) const {
        return (mask() & mask_of(o)) != 0;
    }

    /// The three points completing the context to its Fano plane, sorted.
    std::array<Observable, 3> line_at_infinity() const {
        std::array<Observable, 3> out{points[0] + points[1], points[0] + points[2], points[0] + points[3]};
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Packed ids, ordered the same way as the sorted point tuple.
    std::uint32_t key() const {
        std::uint32_t k = 0;
        for (Observable o : points) {
            k = (k << 8) | static_cast<std::uint32_t>(o.id());
        }
        return k;
    }

    std::string str() const {
        return detail::join_labels(points);
    }

    auto operator<=>(const Context &other) const {
        return points <=> other.points;
    }
    bool operator==(const Context &other) const {
        return points == other.points;
    }
};

inline Context make_context(std::array<Observable, 4> points) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] == points[i + 1]) {
            throw Error(ErrorCode::DuplicatePoint, "repeated point " + points[i].label());
        }
    }
    if ((points[0].id() ^ points[1].id() ^ points[2].id() ^ points[3].id()) != 0) {
        throw Error(ErrorCode::ProductNotScalar, "{" + detail::join_labels(points) + "} does not multiply to +-III");
    }
    detail::require_distinct_commuting(points);
    return Context{points, detail::scalar_sign(points)};
}

inline Context make_context(std::span<const Observable> points) {
    if (points.size() != 4) {
        throw Error(ErrorCode::MalformedLabel, "a context has exactly 4 observables, got " + std::to_string(points.size()));
    }
    return make_context(std::array<Observable, 4>{points[0], points[1], points[2], points[3]});
}

enum class PlaneClass : std::uint8_t { Negative, PositiveA, PositiveB, PositiveC };

inline constexpr std::array<PlaneClass, 4> kPlaneClasses{PlaneClass::Negative, PlaneClass::PositiveA, PlaneClass::PositiveB,
                                                         PlaneClass::PositiveC};

/// Short names used in every file format: "neg", "a", "b", "c".
constexpr std::string_view plane_class_name(PlaneClass c) {
    switch (c) {
        case PlaneClass::Negative: return "neg";
        case PlaneClass::PositiveA: return "a";
        case PlaneClass::PositiveB: return "b";
        case PlaneClass::PositiveC: return "c";
    }
    return "?";
}

inline PlaneClass plane_class_from_name(std::string_view name) {
    for (PlaneClass c : kPlaneClasses) {
        if (plane_class_name(c) == name) {
            return c;
        }
    }
    throw Error(ErrorCode::UnclassifiablePlane, "unknown plane class '" + std::string(name) + "'");
}

struct KindCensus {
    int a = 0;
    int b = 0;
    int c = 0;

    void add(ObservableKind k) {
        (k == ObservableKind::A ? a : k == ObservableKind::B ? b : c) += 1;
    }
    bool operator==(const KindCensus &) const = default;
};

template <class Range>
KindCensus kind_census(const Range &points) {
    KindCensus out;
    for (Observable o : points) {
        out.add(o.kind());
    }
    return out;
}

/// Decision rule for a Fano plane: negative-line count, then the kind census
/// to separate the two plane types without negative lines.
inline PlaneClass classify_counts(int negative_lines, KindCensus census) {
    switch (negative_lines) {
        case 3: return PlaneClass::Negative;
        case 4: return PlaneClass::PositiveA;
        case 0:
            if (census == KindCensus{1, 3, 3}) {
                return PlaneClass::PositiveB;
            }
            if (census == KindCensus{3, 3, 1}) {
                return PlaneClass::PositiveC;
            }
            throw Error(ErrorCode::UnclassifiablePlane, "plane without negative lines has kind census (" +
                                                            std::to_string(census.a) + "," + std::to_string(census.b) + "," +
                                                            std::to_string(census.c) + ")");
        default:
            throw Error(ErrorCode::UnclassifiablePlane,
                        "plane has " + std::to_string(negative_lines) + " negative lines, expected 0, 3 or 4");
    }
}

/// A maximal totally isotropic subspace: 7 points, 7 lines.
struct FanoPlane {
    std::array<Observable, 7> points;
    std::array<IsotropicLine, 7> lines;
    Sign sign = Sign::Positive;
    PlaneClass plane_class = PlaneClass::Negative;

    PointMask mask() const {
        return mask_of(points);
    }

    int negative_line_count() const {
        return static_cast<int>(
            std::count_if(lines.begin(), lines.end(), [](const IsotropicLine &l) { return l.sign == Sign::Negative; }));
    }

    std::vector<IsotropicLine> negative_lines() const {
        std::vector<IsotropicLine> out;
        std::copy_if(lines.begin(), lines.end(), std::back_inserter(out),
                     [](const IsotropicLine &l) { return l.sign == Sign::Negative; });
        return out;
    }

    KindCensus census() const {
        return kind_census(points);
    }

    bool contains(const Context &c) const {
        return (c.mask() & ~mask()) == 0;
    }

    std::string str() const {
        return detail::join_labels(points);
    }

    auto operator<=>(const FanoPlane &other) const {
        return points <=> other.points;
    }
    bool operator==(const FanoPlane &other) const {
        return points == other.points;
    }
};

inline PlaneClass classify_plane(const FanoPlane &plane) {
    return classify_counts(plane.negative_line_count(), plane.census());
}

/// Builds and classifies the plane spanned by seven points.
inline FanoPlane make_plane(std::array<Observable, 7> points) {
    std::sort(points.begin(), points.end());
    detail::require_distinct_commuting(points);
    const PointMask m = mask_of(points);
    std::vector<IsotropicLine> lines;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Observable third = points[i] + points[j];
            if ((m & mask_of(third)) == 0) {
                throw Error(ErrorCode::NotASubspace, "{" + detail::join_labels(points) + "} is not closed under addition");
            }
            if (third > points[j]) {
                lines.push_back(make_line(points[i], points[j]));
            }
        }
    }
    FanoPlane plane{points, {}, detail::scalar_sign(points), PlaneClass::Negative};
    std::sort(lines.begin(), lines.end());
    std::copy(lines.begin(), lines.end(), plane.lines.begin());
    plane.plane_class = classify_plane(plane);
    return plane;
}

/// The unique Fano plane containing the context: its four points plus the line at infinity.
inline FanoPlane extend_to_fano(const Context &c) {
    const auto inf = c.line_at_infinity();
    return make_plane({c.points[0], c.points[1], c.points[2], c.points[3], inf[0], inf[1], inf[2]});
}

/// All 315 totally isotropic lines, ascending.
inline std::vector<IsotropicLine> enumerate_lines() {
    std::vector<IsotropicLine> out;
    for (Observable a : all_observables()) {
        for (Observable b : all_observables()) {
            if (b <= a || !commute(a, b)) {
                continue;
            }
            if ((a + b) > b) {
                out.push_back(make_line(a, b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All 135 Fano planes (maximal totally isotropic subspaces), ascending.
inline std::vector<FanoPlane> enumerate_planes() {
    std::set<std::array<Observable, 7>> seen;
    const auto pts = all_observables();
    for (Observable a : pts) {
        for (Observable b : pts) {
            if (b <= a || !commute(a, b)) {
                continue;
            }
            const Observable ab = a + b;
            for (Observable c : pts) {
                if (c <= b || c == ab || !commute(a, c) || !commute(b, c)) {
                    continue;
                }
                std::array<Observable, 7> span{a, b, c, ab, a + c, b + c, ab + c};
                std::sort(span.begin(), span.end());
                seen.insert(span);
            }
        }
    }
    std::vector<FanoPlane> out;
    out.reserve(seen.size());
    for (const auto &span : seen) {
        out.push_back(make_plane(span));
    }
    return out;
}

/// The hyperbolic quadric of W(5,2) carrying the 35 symmetric observables.
class KleinQuadric {
   public:
    KleinQuadric() {
        for (Observable o : all_observables()) {
            if (o.is_symmetric()) {
                points_.push_back(o);
                mask_ |= mask_of(o);
            }
        }
    }

    const std::vector<Observable> &points() const {
        return points_;
    }
    PointMask mask() const {
        return mask_;
    }
    bool contains(Observable o) const {
        return (mask_ & mask_of(o)) != 0;
    }

   private:
    std::vector<Observable> points_;
    PointMask mask_ = 0;
};

inline bool on_quadric(PointMask points) {
    static const KleinQuadric quadric;
    return (points & ~quadric.mask()) == 0;
}

inline bool on_quadric(std::span<const Observable> points) {
    return std::all_of(points.begin(), points.end(), [](Observable o) { return o.is_symmetric(); });
}

inline bool on_quadric(std::initializer_list<Observable> points) {
    return on_quadric(std::span<const Observable>(points.begin(), points.size()));
}

}  // namespace pentagram
