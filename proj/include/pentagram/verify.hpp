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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pentagram/classifier.hpp"
#include "pentagram/derived.hpp"
#include "pentagram/enumerator.hpp"
#include "pentagram/oracle/matrix_oracle.hpp"
#include "pentagram/polar_space.hpp"
#include "pentagram/structure.hpp"
#include "pentagram/table1.hpp"

namespace pentagram {

/// Mermin's original pentagram built on the GHZ observables; its one negative
/// context is {XXX, XYY, YXY, YYX}.
inline Pentagram mermin_pentagram() {
    auto ctx = [](const char *a, const char *b, const char *c, const char *d) {
        return make_context({Observable::parse(a), Observable::parse(b), Observable::parse(c), Observable::parse(d)});
    };
    return validate_pentagram(std::array<Context, 5>{
        ctx("XII", "IXI", "IIX", "XXX"),
        ctx("XII", "IYI", "IIY", "XYY"),
        ctx("YII", "IXI", "IIY", "YXY"),
        ctx("YII", "IYI", "IIX", "YYX"),
        ctx("XXX", "XYY", "YXY", "YYX"),
    });
}

/// Types never realized on the Klein quadric according to the reference text.
inline const std::vector<int> kReferenceKleinMissingTypes{2, 3, 4, 6, 8, 9, 11, 14, 17, 21, 31};

struct ReportSection {
    std::string title;
    std::vector<CheckResult> checks;
};

struct VerificationReport {
    std::vector<ReportSection> sections;

    bool passed() const {
        return std::all_of(sections.begin(), sections.end(), [](const ReportSection &s) {
            return std::all_of(s.checks.begin(), s.checks.end(), [](const CheckResult &c) { return c.passed; });
        });
    }

    std::pair<int, int> tally() const {
        int pass = 0;
        int total = 0;
        for (const auto &s : sections) {
            for (const auto &c : s.checks) {
                pass += c.passed ? 1 : 0;
                ++total;
            }
        }
        return {pass, total};
    }

    const CheckResult *find(std::string_view name) const {
        for (const auto &s : sections) {
            for (const auto &c : s.checks) {
                if (c.name == name) {
                    return &c;
                }
            }
        }
        return nullptr;
    }

    std::string text() const {
        std::string out;
        for (const auto &s : sections) {
            out += "== " + s.title + "\n";
            for (const auto &c : s.checks) {
                out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name;
                if (!c.detail.empty()) {
                    out += "  [" + c.detail + "]";
                }
                out += "\n";
                for (const auto &ce : c.counterexamples) {
                    out += "      " + ce + "\n";
                }
            }
        }
        const auto [pass, total] = tally();
        out += "verification: " + std::to_string(pass) + "/" + std::to_string(total) + " checks passed\n";
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &s : sections) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto &c : s.checks) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"counterexamples", c.counterexamples}});
            }
            out.push_back({{"section", s.title}, {"checks", checks}});
        }
        const auto [pass, total] = tally();
        return {{"sections", out}, {"passed", pass}, {"total", total}, {"ok", passed()}};
    }
};

namespace detail {

inline CheckResult expect_count(std::string name, long long got, long long want) {
    return CheckResult{std::move(name), got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want), {}};
}

inline void add_failure(CheckResult &r, std::string what) {
    r.passed = false;
    if (r.counterexamples.size() < kMaxCounterexamples) {
        r.counterexamples.push_back(std::move(what));
    }
}

inline ReportSection verify_observables() {
    ReportSection s{"observables", {}};
    const auto all = all_observables();
    std::set<int> ids;
    std::set<std::string> labels;
    for (Observable o : all) {
        ids.insert(o.id());
        labels.insert(o.label());
    }
    bool bijective = ids.size() == kPoints && *ids.begin() == 1 && *ids.rbegin() == kPoints && labels.size() == kPoints;
    for (Observable o : all) {
        bijective = bijective && Observable::parse(o.label()) == o;
    }
    s.checks.push_back(CheckResult{"63 observables, id and label bijective", bijective, std::to_string(ids.size()) + " ids", {}});
    const KindCensus kinds = kind_census(all);
    s.checks.push_back(CheckResult{"kind census A/B/C = 9/27/27", kinds == KindCensus{9, 27, 27},
                                   std::to_string(kinds.a) + "/" + std::to_string(kinds.b) + "/" + std::to_string(kinds.c), {}});
    const auto symmetric = std::count_if(all.begin(), all.end(), [](Observable o) { return o.is_symmetric(); });
    s.checks.push_back(expect_count("symmetric observables", symmetric, 35));
    return s;
}

inline ReportSection verify_oracle(const std::vector<IsotropicLine> &lines, const std::vector<Context> &contexts,
                                   const std::vector<FanoPlane> &planes) {
    ReportSection s{"matrix oracle", {}};
    CheckResult pairs{"signed_product and commutation agree with 8x8 matrices on all 63^2 ordered pairs", true, "", {}};
    for (Observable a : all_observables()) {
        for (Observable b : all_observables()) {
            const std::array<Observable, 2> ab{a, b};
            if (!oracle::agrees_with_signed_product(ab)) {
                add_failure(pairs, "product " + a.label() + "*" + b.label());
            }
            if (oracle::commute(a, b) != commute(a, b)) {
                add_failure(pairs, "commutation " + a.label() + "," + b.label());
            }
        }
        if (oracle::is_symmetric(a) != a.is_symmetric()) {
            add_failure(pairs, "symmetry " + a.label());
        }
    }
    s.checks.push_back(pairs);

    CheckResult sets{"line, context and plane signs agree with 8x8 matrices", true, "", {}};
    for (const auto &l : lines) {
        if (oracle::scalar_sign(l.points) != to_int(l.sign) || !oracle::agrees_with_signed_product(l.points)) {
            add_failure(sets, "line {" + join_labels(l.points) + "}");
        }
    }
    for (const auto &c : contexts) {
        if (oracle::scalar_sign(c.points) != to_int(c.sign) || !oracle::agrees_with_signed_product(c.points)) {
            add_failure(sets, "context {" + c.str() + "}");
        }
    }
    for (const auto &p : planes) {
        if (oracle::scalar_sign(p.points) != to_int(p.sign) || !oracle::agrees_with_signed_product(p.points)) {
            add_failure(sets, "plane {" + p.str() + "}");
        }
    }
    sets.detail = std::to_string(lines.size()) + " lines, " + std::to_string(contexts.size()) + " contexts, " +
                  std::to_string(planes.size()) + " planes";
    s.checks.push_back(sets);
    return s;
}

inline ReportSection verify_geometry(const std::vector<IsotropicLine> &lines, const std::vector<Context> &contexts,
                                     const std::vector<FanoPlane> &planes) {
    ReportSection s{"geometry", {}};
    s.checks.push_back(expect_count("isotropic lines", static_cast<long long>(lines.size()), 315));

    CheckResult per_point{"every point lies on 15 lines", true, "", {}};
    for (Observable o : all_observables()) {
        const auto n = std::count_if(lines.begin(), lines.end(), [o](const IsotropicLine &l) { return l.contains(o); });
        if (n != 15) {
            add_failure(per_point, o.label() + " on " + std::to_string(n));
        }
    }
    s.checks.push_back(per_point);

    s.checks.push_back(expect_count("Fano planes", static_cast<long long>(planes.size()), 135));

    std::array<int, 4> census{};
    CheckResult structure{"plane classification total; negative lines concurrent in neg planes, Pasch in a planes", true, "",
                          {}};
    CheckResult coherence{"plane sign equals product of its 7 line signs; negative iff 3 negative lines", true, "", {}};
    for (const FanoPlane &p : planes) {
        ++census[static_cast<std::size_t>(p.plane_class)];
        Sign product = Sign::Positive;
        for (const auto &l : p.lines) {
            product = product * l.sign;
        }
        const int neg = p.negative_line_count();
        if (product != p.sign || ((p.sign == Sign::Negative) != (neg == 3))) {
            add_failure(coherence, "{" + p.str() + "}");
        }
        const auto negative = p.negative_lines();
        if (p.plane_class == PlaneClass::Negative) {
            PointMask common = ~PointMask{0};
            for (const auto &l : negative) {
                common &= l.mask();
            }
            if (negative.size() != 3 || std::popcount(common) != 1) {
                add_failure(structure, "neg {" + p.str() + "}");
            }
        } else if (p.plane_class == PlaneClass::PositiveA) {
            std::set<int> meets;
            for (std::size_t i = 0; i < negative.size(); ++i) {
                for (std::size_t j = i + 1; j < negative.size(); ++j) {
                    meets.insert(std::countr_zero(negative[i].mask() & negative[j].mask()));
                }
            }
            if (negative.size() != 4 || meets.size() != 6 || p.sign != Sign::Positive) {
                add_failure(structure, "a {" + p.str() + "}");
            }
        } else if (neg != 0 || p.sign != Sign::Positive) {
            add_failure(structure, "b/c {" + p.str() + "}");
        }
    }
    s.checks.push_back(structure);
    s.checks.push_back(coherence);
    const bool census_ok = census == derived::kPlaneClassCensus;
    s.checks.push_back(CheckResult{"plane class census neg/a/b/c matches frozen data", census_ok,
                                   std::to_string(census[0]) + "/" + std::to_string(census[1]) + "/" +
                                       std::to_string(census[2]) + "/" + std::to_string(census[3]),
                                   {}});

    s.checks.push_back(expect_count("contexts", static_cast<long long>(contexts.size()), 945));
    const auto negative_contexts =
        std::count_if(contexts.begin(), contexts.end(), [](const Context &c) { return c.sign == Sign::Negative; });
    s.checks.push_back(CheckResult{"context sign census matches frozen data",
                                   negative_contexts == derived::kNegativeContexts &&
                                       static_cast<int>(contexts.size()) - negative_contexts == derived::kPositiveContexts,
                                   std::to_string(negative_contexts) + " negative", {}});

    CheckResult unique{"each context lies in exactly one plane (its extension); each plane holds 7 contexts", true, "", {}};
    std::map<std::array<Observable, 7>, int> per_plane;
    for (const Context &c : contexts) {
        const auto holders = std::count_if(planes.begin(), planes.end(), [&c](const FanoPlane &p) { return p.contains(c); });
        const FanoPlane ext = extend_to_fano(c);
        if (holders != 1 || !ext.contains(c) || !std::binary_search(planes.begin(), planes.end(), ext)) {
            add_failure(unique, "{" + c.str() + "}");
        }
        ++per_plane[ext.points];
    }
    for (const FanoPlane &p : planes) {
        if (per_plane[p.points] != 7) {
            add_failure(unique, "plane {" + p.str() + "} holds " + std::to_string(per_plane[p.points]));
        }
    }
    s.checks.push_back(unique);

    const KleinQuadric quadric;
    s.checks.push_back(expect_count("Klein quadric points", static_cast<long long>(quadric.points().size()), 35));
    return s;
}

inline ReportSection verify_enumeration(std::span<const Pentagram> all, const ConfigurationSearch &search) {
    ReportSection s{"enumeration", {}};
    s.checks.push_back(expect_count("pentagrams", static_cast<long long>(all.size()), 12096));
    const auto families = [&] {
        std::map<int, long long> f{{1, 0}, {3, 0}, {5, 0}};
        for (const auto &p : all) {
            ++f[p.negative_context_count];
        }
        return f;
    }();
    s.checks.push_back(CheckResult{"families by negative contexts 5/3/1 = 108/4104/7884",
                                   families.at(5) == 108 && families.at(3) == 4104 && families.at(1) == 7884 &&
                                       families.size() == 3,
                                   std::to_string(families.at(5)) + "/" + std::to_string(families.at(3)) + "/" +
                                       std::to_string(families.at(1)),
                                   {}});
    s.checks.push_back(expect_count("even-parity five-context configurations", static_cast<long long>(search.even.size()), 0));
    s.checks.push_back(CheckResult{"fresh search reproduces the loaded pentagram list",
                                   std::equal(all.begin(), all.end(), search.odd.begin(), search.odd.end()), "", {}});

    CheckResult regular{"each of the 10 points lies on exactly 2 contexts", true, "", {}};
    for (const Pentagram &p : all) {
        for (Observable o : p.points) {
            const auto n = std::count_if(p.contexts.begin(), p.contexts.end(), [o](const Context &c) { return c.contains(o); });
            if (n != 2) {
                add_failure(regular, o.label() + " in {" + p.contexts[0].str() + "} ...");
            }
        }
        if (std::popcount(p.mask()) != 10) {
            add_failure(regular, "point count");
        }
    }
    s.checks.push_back(regular);
    return s;
}

}  // namespace detail

/// Runs every invariant suite over a pentagram list (normally the cached
/// enumeration) against a reference table.
inline VerificationReport run_verification(std::span<const Pentagram> all, const GoldenTable &golden = table1(),
                                           EnumerationOptions options = {}) {
    VerificationReport report;
    const auto lines = enumerate_lines();
    const auto contexts = enumerate_contexts();
    const auto planes = enumerate_planes();

    report.sections.push_back(detail::verify_observables());
    report.sections.push_back(detail::verify_oracle(lines, contexts, planes));
    report.sections.push_back(detail::verify_geometry(lines, contexts, planes));
    report.sections.push_back(detail::verify_enumeration(all, search_configurations(ContextGraph(contexts), options)));

    const auto quadric = pentagrams_on_quadric(all);
    ReportSection klein{"Klein quadric", {}};
    klein.checks.push_back(detail::expect_count("pentagrams on the quadric", static_cast<long long>(quadric.size()), 336));

    ReportSection classification{"classification", {}};
    std::optional<Atlas> atlas;
    try {
        atlas = build_atlas(all, golden);
        classification.checks.push_back(
            CheckResult{"signatures match the reference table one-to-one", true, std::to_string(golden.size()) + " types", {}});
    } catch (const AtlasMismatch &e) {
        classification.checks.push_back(CheckResult{"signatures match the reference table one-to-one", false,
                                                     std::to_string(e.diff().size()) + " differences", e.diff()});
    }

    if (atlas) {
        std::set<TypeSignature> distinct;
        for (const auto &s : signatures(all)) {
            distinct.insert(s);
        }
        classification.checks.push_back(detail::expect_count("distinct signatures", static_cast<long long>(distinct.size()), 45));
        long long total = 0;
        std::vector<int> five_negative;
        CheckResult frozen{"per-type multiplicities match frozen data", atlas->rows.size() == derived::kMultiplicity.size(),
                           "", {}};
        for (const AtlasRow &row : atlas->rows) {
            total += row.multiplicity;
            if (row.signature.c_neg == 5) {
                five_negative.push_back(row.t);
            }
            const auto idx = static_cast<std::size_t>(row.t - 1);
            if (idx < derived::kMultiplicity.size() && derived::kMultiplicity[idx] != row.multiplicity) {
                detail::add_failure(frozen, "type " + std::to_string(row.t) + ": " + std::to_string(row.multiplicity));
            }
        }
        classification.checks.push_back(detail::expect_count("multiplicities sum", total, 12096));
        classification.checks.push_back(CheckResult{"types with five negative contexts are {1,2}",
                                                    five_negative == std::vector<int>{1, 2}, detail::join_ints(five_negative), {}});
        classification.checks.push_back(frozen);

        const KleinCensus census = klein_census(*atlas, quadric, golden);
        klein.checks.push_back(CheckResult{"per-type K matches the reference column", census.matches_reference(),
                                           std::to_string(census.mismatches.size()) + " types differ", census.mismatches});
        klein.checks.push_back(detail::expect_count("K column sum", census.total, 336));
        klein.checks.push_back(
            detail::expect_count("types realized on the quadric", static_cast<long long>(census.realized.size()), 34));
        klein.checks.push_back(CheckResult{"types missing from the quadric", census.missing == kReferenceKleinMissingTypes,
                                           "computed " + detail::join_ints(census.missing) + ", reference " +
                                               detail::join_ints(kReferenceKleinMissingTypes),
                                           {}});
        bool no_c = true;
        for (int t : census.missing) {
            no_c = no_c && atlas->row(t).signature.f_c == 0;
        }
        klein.checks.push_back(CheckResult{"observed: every type missing from the quadric lacks c planes", no_c, "", {}});
        bool frozen_k = true;
        for (std::size_t r = 0; r < census.k_by_type.size() && r < derived::kComputedKlein.size(); ++r) {
            frozen_k = frozen_k && census.k_by_type[r] == derived::kComputedKlein[r];
        }
        klein.checks.push_back(CheckResult{"per-type K matches frozen computed data", frozen_k, "", {}});
    }
    report.sections.push_back(classification);
    report.sections.push_back(klein);

    if (atlas) {
        report.sections.push_back(ReportSection{"structure", structural_checks(all, *atlas)});
        auto ctx = context_checks(all, *atlas);
        report.sections.push_back(ReportSection{"contexts", std::move(ctx)});
    }

    ReportSection neighbors{"two-edge neighbors", {}};
    {
        const PentagramIndex index(all);
        CheckResult ten{"every pentagram has exactly 10 two-edge neighbors", true, "", {}};
        CheckResult closed{"neighbor relation is symmetric and closed in the enumerated set", true, "", {}};
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto nbrs = index.two_edge_neighbor_indices(all[i]);
            if (nbrs.size() != 10) {
                detail::add_failure(ten, "{" + all[i].contexts[0].str() + "} ... has " + std::to_string(nbrs.size()));
            }
            for (std::size_t j : nbrs) {
                const auto back = index.two_edge_neighbor_indices(all[j]);
                if (!std::binary_search(back.begin(), back.end(), i)) {
                    detail::add_failure(closed, "asymmetric pair " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
        ten.detail = std::to_string(all.size()) + " pentagrams";
        neighbors.checks.push_back(ten);
        neighbors.checks.push_back(closed);
    }
    report.sections.push_back(neighbors);

    ReportSection spot{"spot checks", {}};
    {
        const Pentagram ghz = mermin_pentagram();
        const auto it = std::lower_bound(all.begin(), all.end(), ghz);
        spot.checks.push_back(CheckResult{"Mermin pentagram is enumerated with one negative context",
                                          it != all.end() && *it == ghz && ghz.negative_context_count == 1, "", {}});
        const TypeSignature sig = signature(ghz);
        const int t = atlas ? atlas->type_of[static_cast<std::size_t>(it - all.begin())] : 0;
        spot.checks.push_back(CheckResult{"Mermin pentagram has type 45, signature (1,6,0,4,1,0,0,4)",
                                          t == 45 && sig == TypeSignature{1, 6, 0, 4, 1, 0, 0, 4},
                                          "type " + std::to_string(t) + " " + sig.str(), {}});
        const Context magic = make_context({Observable::parse("XXX"), Observable::parse("XYY"), Observable::parse("YXY"),
                                            Observable::parse("YYX")});
        const FanoPlane plane = extend_to_fano(magic);
        const std::array<Observable, 3> inf{Observable::parse("IZZ"), Observable::parse("ZIZ"), Observable::parse("ZZI")};
        bool oracle_ok = true;
        for (const Context &c : ghz.contexts) {
            oracle_ok = oracle_ok && oracle::scalar_sign(c.points) == to_int(c.sign);
        }
        spot.checks.push_back(CheckResult{"magic edge extends to a negative plane with line at infinity {IZZ,ZIZ,ZZI}",
                                          plane.plane_class == PlaneClass::Negative && magic.line_at_infinity() == inf &&
                                              magic.sign == Sign::Negative && oracle_ok,
                                          "", {}});
    }
    report.sections.push_back(spot);
    return report;
}

}  // namespace pentagram
