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
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pentagram/classifier.hpp"
#include "pentagram/enumerator.hpp"

namespace pentagram {

/// Outcome of one named check: pass/fail, a one-line summary, and a bounded
/// list of counterexamples.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> counterexamples;
};

inline constexpr std::size_t kMaxCounterexamples = 5;

namespace detail {

inline std::string describe(const Pentagram &p, int type) {
    std::string out = "type " + std::to_string(type) + " {";
    for (std::size_t k = 0; k < p.contexts.size(); ++k) {
        out += (k ? " | " : "") + p.contexts[k].str();
    }
    return out + "}";
}

inline std::string join_ints(const std::vector<int> &v) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k ? "," : "") + std::to_string(v[k]);
    }
    return out + "}";
}

// Runs `holds` over every pentagram whose type is not in `exceptions`. Each
// listed exception must also be genuine: at least one of its pentagrams fails
// the rule, otherwise the exception is not needed and the check fails.
inline CheckResult check_rule(std::string name, std::span<const Pentagram> all, const std::vector<TypeSignature> &sigs,
                              const Atlas &atlas, const std::vector<int> &exceptions,
                              const std::function<bool(const Pentagram &, const TypeSignature &)> &holds) {
    CheckResult r{std::move(name), true, "", {}};
    std::size_t violations = 0;
    std::set<int> exception_violated;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int t = atlas.type_of[i];
        const bool ok = holds(all[i], sigs[i]);
        if (std::find(exceptions.begin(), exceptions.end(), t) != exceptions.end()) {
            if (!ok) {
                exception_violated.insert(t);
            }
            continue;
        }
        if (!ok) {
            ++violations;
            if (r.counterexamples.size() < kMaxCounterexamples) {
                r.counterexamples.push_back(describe(all[i], t));
            }
        }
    }
    std::vector<int> spurious;
    for (int t : exceptions) {
        if (!exception_violated.contains(t)) {
            spurious.push_back(t);
        }
    }
    r.passed = violations == 0 && spurious.empty();
    r.detail = std::to_string(violations) + " violations over " + std::to_string(all.size()) + " pentagrams";
    if (!exceptions.empty()) {
        r.detail += "; exceptions " + join_ints(exceptions);
        if (!spurious.empty()) {
            r.detail += " (not actually exceptional: " + join_ints(spurious) + ")";
        }
    }
    return r;
}

// The set of types whose signature satisfies `pred` must equal `expected`.
inline CheckResult check_type_set(std::string name, const Atlas &atlas, const std::vector<int> &expected,
                                  const std::function<bool(const TypeSignature &)> &pred) {
    std::vector<int> found;
    for (const AtlasRow &row : atlas.rows) {
        if (row.multiplicity > 0 && pred(row.signature)) {
            found.push_back(row.t);
        }
    }
    CheckResult r{std::move(name), found == expected, "types " + join_ints(found) + ", expected " + join_ints(expected), {}};
    return r;
}

}  // namespace detail

/// The fine-structure properties of pentagram types, each checked over every
/// pentagram (or every realized type, for the type-set statements).
inline std::vector<CheckResult> structural_checks(std::span<const Pentagram> all, const Atlas &atlas) {
    const std::vector<TypeSignature> sigs = signatures(all);
    std::vector<CheckResult> out;

    out.push_back(detail::check_rule("type-C floor and gap: O_C >= 2 and O_C != 8", all, sigs, atlas, {},
                                     [](const Pentagram &, const TypeSignature &s) { return s.o_c >= 2 && s.o_c != 8; }));

    out.push_back(detail::check_rule("type-B band: O_B in {0,4,5}", all, sigs, atlas, {},
                                     [](const Pentagram &, const TypeSignature &s) {
                                         return s.o_b == 0 || s.o_b == 4 || s.o_b == 5;
                                     }));

    out.push_back(detail::check_rule("type-B pairing: no context holds exactly one type-B observable", all, sigs, atlas, {},
                                     [](const Pentagram &p, const TypeSignature &) {
                                         return std::none_of(p.contexts.begin(), p.contexts.end(), [](const Context &c) {
                                             return kind_census(c.points).b == 1;
                                         });
                                     }));

    out.push_back(detail::check_rule(
        "three type-A observables share a context", all, sigs, atlas, {41, 42},
        [](const Pentagram &p, const TypeSignature &s) {
            if (s.o_a != 3) {
                return true;
            }
            PointMask a_points = 0;
            for (Observable o : p.points) {
                if (o.kind() == ObservableKind::A) {
                    a_points |= mask_of(o);
                }
            }
            return std::any_of(p.contexts.begin(), p.contexts.end(),
                               [a_points](const Context &c) { return (a_points & ~c.mask()) == 0; });
        }));

    out.push_back(detail::check_rule("type-A ceiling: O_A <= 6", all, sigs, atlas, {},
                                     [](const Pentagram &, const TypeSignature &s) { return s.o_a <= 6; }));

    out.push_back(detail::check_rule("planes b and c without a imply one negative context", all, sigs, atlas, {12},
                                     [](const Pentagram &, const TypeSignature &s) {
                                         return !(s.f_b > 0 && s.f_c > 0 && s.f_a == 0) || s.c_neg == 1;
                                     }));

    out.push_back(detail::check_rule("no type-A observable implies no c plane", all, sigs, atlas, {},
                                     [](const Pentagram &, const TypeSignature &s) { return s.o_a != 0 || s.f_c == 0; }));

    out.push_back(detail::check_rule("planes a, b and c together imply all three observable kinds", all, sigs, atlas, {19},
                                     [](const Pentagram &, const TypeSignature &s) {
                                         return !(s.f_a > 0 && s.f_b > 0 && s.f_c > 0) || (s.o_a > 0 && s.o_b > 0 && s.o_c > 0);
                                     }));

    out.push_back(detail::check_type_set("all five planes negative", atlas, {1, 4},
                                         [](const TypeSignature &s) { return s.f_neg == 5; }));
    out.push_back(detail::check_type_set("all five planes positive", atlas, {41, 42},
                                         [](const TypeSignature &s) { return s.f_neg == 0; }));

    out.push_back(detail::check_type_set("positive planes of class c only", atlas, {13, 27, 45},
                                         [](const TypeSignature &s) { return s.f_a == 0 && s.f_b == 0 && s.f_c > 0; }));

    out.push_back(detail::check_type_set("positive plane classes equally represented", atlas, {15, 32},
                                         [](const TypeSignature &s) { return s.f_a == s.f_b && s.f_b == s.f_c && s.f_a > 0; }));

    return out;
}

/// Context-level observations: which (sign, plane class) pairs occur, and the
/// context makeup of the type 15, 28 and 36 pentagrams.
inline std::vector<CheckResult> context_checks(std::span<const Pentagram> all, const Atlas &atlas) {
    std::vector<CheckResult> out;
    const std::set<ContextKind> kinds = context_kind_census(all);

    std::set<ContextKind> negative;
    std::set<ContextKind> positive;
    for (const ContextKind &k : kinds) {
        (k.sign == Sign::Negative ? negative : positive).insert(k);
    }
    const std::set<ContextKind> expected_negative{{Sign::Negative, PlaneClass::Negative}, {Sign::Negative, PlaneClass::PositiveA}};
    auto names = [](const std::set<ContextKind> &s) {
        std::string out;
        for (const auto &k : s) {
            out += (out.empty() ? "" : " ") + k.str();
        }
        return out;
    };
    out.push_back(CheckResult{"negative contexts extend to neg or a planes", negative == expected_negative, "observed " + names(negative), {}});
    out.push_back(CheckResult{"positive contexts extend to all four plane classes", positive.size() == 4, "observed " + names(positive), {}});

    // Type 15: one of the three negative contexts has a positive plane.
    // Types 28 and 36: some pentagram has its single negative context on a
    // positive plane and its four positive contexts on four different plane
    // classes. All of type 36 do; type 28 also has a +/a +/a +/b +/c -/neg makeup.
    CheckResult t15{"type 15: exactly one negative context extends to a positive plane", true, "", {}};
    CheckResult t28{"types 28, 36: a pentagram with its negative context on a positive plane and positive contexts on four distinct classes", true, "", {}};
    std::size_t n15 = 0;
    std::map<int, std::pair<std::size_t, std::size_t>> shown;  // type -> (exhibiting, total)
    shown[28];
    shown[36];
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int t = atlas.type_of[i];
        if (t != 15 && t != 28 && t != 36) {
            continue;
        }
        int negative_on_positive = 0;
        std::set<PlaneClass> positive_classes;
        for (const Context &c : all[i].contexts) {
            const PlaneClass pc = extend_to_fano(c).plane_class;
            if (c.sign == Sign::Negative) {
                negative_on_positive += pc != PlaneClass::Negative ? 1 : 0;
            } else {
                positive_classes.insert(pc);
            }
        }
        if (t == 15) {
            ++n15;
            if (negative_on_positive != 1) {
                t15.passed = false;
                if (t15.counterexamples.size() < kMaxCounterexamples) {
                    t15.counterexamples.push_back(detail::describe(all[i], t));
                }
            }
        } else {
            auto &[hits, total] = shown[t];
            ++total;
            hits += negative_on_positive == 1 && positive_classes.size() == 4 ? 1 : 0;
        }
    }
    t15.detail = "checked " + std::to_string(n15) + " pentagrams";
    t15.passed = t15.passed && n15 > 0;
    for (const auto &[t, counts] : shown) {
        t28.passed = t28.passed && counts.first > 0;
        t28.detail += (t28.detail.empty() ? "type " : ", type ") + std::to_string(t) + ": " + std::to_string(counts.first) + "/" +
                      std::to_string(counts.second);
    }
    out.push_back(t15);
    out.push_back(t28);
    return out;
}

}  // namespace pentagram
