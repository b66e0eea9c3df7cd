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

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "catch_amalgamated.hpp"
#include "pentagram/enumerator.hpp"
#include "pentagram/oracle/matrix_oracle.hpp"
#include "pentagram/verify.hpp"
#include "support.hpp"

using namespace pentagram;
using pentagram::testing::all_pentagrams;
using pentagram::testing::ctx;

namespace {

template <class F>
ErrorCode error_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::BadCache;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("context graph is 176-regular on 945 nodes", "[graph]") {
    const ContextGraph g(enumerate_contexts());
    REQUIRE(g.size() == 945);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.degree(i) == 176);
        CHECK_FALSE(g.adjacent(i, i));
        CHECK(g.index_of(g.context(i)) == i);
    }
    CHECK(g.adjacent(0, 1) == g.adjacent(1, 0));
}

TEST_CASE("12096 pentagrams split 108/4104/7884 with odd parity only", "[enumeration]") {
    const auto &all = all_pentagrams();
    REQUIRE(all.size() == 12096);
    std::map<int, int> families;
    for (const Pentagram &p : all) {
        ++families[p.negative_context_count];
    }
    CHECK(families == std::map<int, int>{{1, 7884}, {3, 4104}, {5, 108}});
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

    const ConfigurationSearch search = search_configurations(ContextGraph(enumerate_contexts()));
    CHECK(search.even.empty());
    CHECK(search.odd == all);
}

TEST_CASE("every pentagram satisfies the invariants, checked independently", "[enumeration][property]") {
    for (const Pentagram &p : all_pentagrams()) {
        std::map<Observable, int> incidence;
        int negative = 0;
        for (const Context &c : p.contexts) {
            for (Observable o : c.points) {
                ++incidence[o];
            }
            negative += oracle::scalar_sign(c.points) == -1;
        }
        REQUIRE(incidence.size() == 10);
        for (const auto &[o, n] : incidence) {
            CHECK(n == 2);
        }
        CHECK(negative == p.negative_context_count);
        CHECK(negative % 2 == 1);
        CHECK(validate_pentagram(p.contexts) == p);
    }
}

TEST_CASE("naive five-fold loop finds the same configurations", "[enumeration][oracle]") {
    // No bitsets, no ordered candidate sets: adjacency lists and a final check.
    const auto contexts = enumerate_contexts();
    const std::size_t n = contexts.size();
    std::vector<std::vector<std::size_t>> higher(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::popcount(contexts[i].mask() & contexts[j].mask()) == 1) {
                higher[i].push_back(j);
            }
        }
    }
    auto meets_once = [&](std::size_t a, std::size_t b) {
        return std::popcount(contexts[a].mask() & contexts[b].mask()) == 1;
    };
    std::set<std::array<std::size_t, 5>> found;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : higher[a]) {
            for (std::size_t c : higher[b]) {
                if (!meets_once(a, c)) continue;
                for (std::size_t d : higher[c]) {
                    if (!meets_once(a, d) || !meets_once(b, d)) continue;
                    for (std::size_t e : higher[d]) {
                        if (!meets_once(a, e) || !meets_once(b, e) || !meets_once(c, e)) continue;
                        const std::array<std::size_t, 5> idx{a, b, c, d, e};
                        PointMask all_meets = 0;
                        int distinct = 0;
                        for (std::size_t i = 0; i < 5; ++i) {
                            for (std::size_t j = i + 1; j < 5; ++j) {
                                const PointMask m = contexts[idx[i]].mask() & contexts[idx[j]].mask();
                                distinct += (all_meets & m) == 0;
                                all_meets |= m;
                            }
                        }
                        if (distinct == 10) {
                            found.insert(idx);
                        }
                    }
                }
            }
        }
    }
    const ContextGraph g(contexts);
    std::set<std::array<std::size_t, 5>> library;
    for (const Pentagram &p : all_pentagrams()) {
        std::array<std::size_t, 5> idx{};
        for (std::size_t k = 0; k < 5; ++k) {
            idx[k] = *g.index_of(p.contexts[k]);
        }
        library.insert(idx);
    }
    CHECK(found.size() == 12096);
    CHECK(found == library);
}

TEST_CASE("thread count does not change the result", "[enumeration][determinism]") {
    const ContextGraph g(enumerate_contexts());
    const auto one = enumerate_pentagrams(g, {1});
    for (unsigned threads : {2U, 3U, 8U}) {
        CHECK(enumerate_pentagrams(g, {threads}) == one);
    }
    CHECK(one == all_pentagrams());
}

TEST_CASE("validate_pentagram", "[validation]") {
    const Pentagram ghz = mermin_pentagram();
    CHECK(ghz.negative_context_count == 1);

    SECTION("input order does not matter") {
        std::array<Context, 5> cs = ghz.contexts;
        std::reverse(cs.begin(), cs.end());
        CHECK(validate_pentagram(cs) == ghz);
    }
    SECTION("a context not meeting the others") {
        std::array<Context, 5> cs = ghz.contexts;
        cs[0] = ctx("ZII", "IZI", "IIZ", "ZZZ");
        CHECK(error_of([&] { validate_pentagram(cs); }) == ErrorCode::BadIntersection);
    }
    SECTION("five contexts of one Fano plane") {
        const FanoPlane plane = extend_to_fano(ctx("XII", "IXI", "IIX", "XXX"));
        std::vector<Context> inside;
        for (const Context &c : enumerate_contexts()) {
            if (plane.contains(c)) {
                inside.push_back(c);
            }
        }
        REQUIRE(inside.size() == 7);
        CHECK(error_of([&] { validate_pentagram(std::span<const Context>(inside.data(), 5)); }) ==
              ErrorCode::BadIntersection);
    }
    SECTION("pairwise single meets but a repeated meet point") {
        // Three contexts through XII plus two more meeting each of them once.
        const ContextGraph g(enumerate_contexts());
        const Context a = ctx("XII", "IXI", "IIX", "XXX");
        const Context b = ctx("XII", "IYI", "IIY", "XYY");
        const Context c = ctx("XII", "IZI", "IIZ", "XZZ");
        std::optional<std::array<Context, 5>> clique;
        for (std::size_t i = 0; i < g.size() && !clique; ++i) {
            const Context &d = g.context(i);
            auto meets_once = [](const Context &u, const Context &v) { return std::popcount(u.mask() & v.mask()) == 1; };
            if (!meets_once(d, a) || !meets_once(d, b) || !meets_once(d, c)) continue;
            for (std::size_t j = i + 1; j < g.size() && !clique; ++j) {
                const Context &e = g.context(j);
                if (meets_once(e, a) && meets_once(e, b) && meets_once(e, c) && meets_once(d, e)) {
                    clique = std::array<Context, 5>{a, b, c, d, e};
                }
            }
        }
        REQUIRE(clique);
        CHECK(error_of([&] { validate_pentagram(*clique); }) == ErrorCode::RepeatedMeetPoint);
    }
    SECTION("even parity is rejected") {
        // Flipping a recorded sign simulates a non-magic configuration.
        std::array<Context, 5> cs = ghz.contexts;
        cs[0].sign = cs[0].sign * Sign::Negative;
        CHECK(error_of([&] { validate_pentagram(cs); }) == ErrorCode::EvenParity);
    }
    SECTION("wrong context count") {
        CHECK(error_of([&] { validate_pentagram(std::span<const Context>(ghz.contexts.data(), 4)); }) ==
              ErrorCode::BadIntersection);
    }
}

TEST_CASE("pentagrams on the Klein quadric", "[quadric]") {
    const auto quadric = pentagrams_on_quadric(all_pentagrams());
    CHECK(quadric.size() == 336);
    for (const Pentagram &p : quadric) {
        CHECK(on_quadric(p.points));
    }
    CHECK_FALSE(on_quadric(mermin_pentagram().points));
    CHECK(std::find(quadric.begin(), quadric.end(), mermin_pentagram()) == quadric.end());
}
