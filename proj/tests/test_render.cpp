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

#include <map>
#include <regex>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "catch_amalgamated.hpp"
#include "pentagram/render.hpp"
#include "pentagram/verify.hpp"
#include "support.hpp"

using namespace pentagram;
using pentagram::testing::all_pentagrams;
using pentagram::testing::atlas;

namespace {

struct Vertex {
    std::string name;
    std::string label;
};

struct Edge {
    std::string context;
    std::string plane;
    std::string negative;
    std::string infinity;
    std::string penwidth;
};

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, Vertex, Edge>;

Graph parse_dot(const std::string &dot) {
    Graph g;
    boost::dynamic_properties dp(boost::ignore_other_properties);
    dp.property("node_id", boost::get(&Vertex::name, g));
    dp.property("label", boost::get(&Vertex::label, g));
    dp.property("context", boost::get(&Edge::context, g));
    dp.property("plane", boost::get(&Edge::plane, g));
    dp.property("negative", boost::get(&Edge::negative, g));
    dp.property("infinity", boost::get(&Edge::infinity, g));
    dp.property("penwidth", boost::get(&Edge::penwidth, g));
    REQUIRE(boost::read_graphviz(dot, g, dp, "node_id"));
    return g;
}

struct StarSummary {
    std::set<std::string> heavy_contexts;
    std::set<std::string> contexts;
    std::set<std::string> star_vertices;
    int star_edges = 0;
    int plane_edges = 0;
    int infinity_edges = 0;
};

StarSummary summarize(const Graph &g) {
    StarSummary s;
    for (auto [it, end] = boost::edges(g); it != end; ++it) {
        const Edge &e = g[*it];
        if (!e.context.empty()) {
            ++s.star_edges;
            s.contexts.insert(e.context);
            s.star_vertices.insert(g[boost::source(*it, g)].label);
            s.star_vertices.insert(g[boost::target(*it, g)].label);
            if (e.penwidth == "4") {
                s.heavy_contexts.insert(e.context);
                CHECK(e.negative == "true");
            } else {
                CHECK(e.negative == "false");
            }
        } else {
            ++s.plane_edges;
            s.infinity_edges += e.infinity == "true";
        }
    }
    return s;
}

}  // namespace

TEST_CASE("GHZ pentagram DOT has one heavy context", "[render]") {
    const Pentagram p = mermin_pentagram();
    const Graph g = parse_dot(to_dot(p));
    const StarSummary s = summarize(g);
    CHECK(s.contexts.size() == 5);
    CHECK(s.star_edges == 15);
    CHECK(s.heavy_contexts.size() == 1);
    CHECK(s.star_vertices.size() == 10);
    for (Observable o : p.points) {
        CHECK(s.star_vertices.count(o.label()) == 1);
    }
    // Five insets: 7 lines each, the six straight ones as 2 segments and the circle as 3.
    CHECK(s.plane_edges == 5 * (6 * 2 + 3));
    CHECK(s.infinity_edges == 5 * 3);
    CHECK(boost::num_vertices(g) == 10 + 5 * 7);
}

TEST_CASE("type-1 pentagrams have five heavy contexts", "[render]") {
    const auto &all = all_pentagrams();
    int checked = 0;
    for (std::size_t i = 0; i < all.size() && checked < 5; ++i) {
        if (atlas().type_of[i] == 1) {
            CHECK(summarize(parse_dot(to_dot(all[i]))).heavy_contexts.size() == 5);
            ++checked;
        }
    }
    CHECK(checked == 5);
}

TEST_CASE("heavy contexts match the sign of every context across types", "[render]") {
    const auto &all = all_pentagrams();
    std::set<int> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (seen.insert(atlas().type_of[i]).second) {
            const StarSummary s = summarize(parse_dot(to_dot(all[i])));
            CHECK(static_cast<int>(s.heavy_contexts.size()) == all[i].negative_context_count);
        }
    }
    CHECK(seen.size() == 45);
}

TEST_CASE("insets annotate the plane class and the GHZ edge's line at infinity", "[render]") {
    const std::string dot = to_dot(mermin_pentagram());
    CHECK(dot.find("plane neg") != std::string::npos);
    CHECK(dot.find("plane c") != std::string::npos);
    // The negative context (index 4 in canonical order) draws IZZ, ZIZ, ZZI as its infinity line.
    const Graph g = parse_dot(dot);
    std::set<std::string> infinity_labels;
    for (auto [it, end] = boost::edges(g); it != end; ++it) {
        if (g[*it].infinity == "true" && g[*it].plane == "4") {
            infinity_labels.insert(g[boost::source(*it, g)].label);
            infinity_labels.insert(g[boost::target(*it, g)].label);
        }
    }
    CHECK(mermin_pentagram().contexts[4].sign == Sign::Negative);
    CHECK(infinity_labels == std::set<std::string>{"IZZ", "ZIZ", "ZZI"});
}

TEST_CASE("SVG output", "[render]") {
    const std::string svg = to_svg(mermin_pentagram());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    const std::regex heavy("class=\"context negative\"");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), heavy), std::sregex_iterator()) == 1);
    const std::regex circle("<circle class=\"infinity");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle), std::sregex_iterator()) == 5);
}

TEST_CASE("layout puts each observable at the meet of its two star lines", "[render]") {
    const Pentagram p = mermin_pentagram();
    const detail::PentagramLayout lay = detail::layout(p);
    std::set<std::pair<long, long>> positions;
    for (Observable o : p.points) {
        const auto pos = lay.position[static_cast<std::size_t>(o.id())];
        positions.insert({std::lround(pos.x * 100), std::lround(pos.y * 100)});
    }
    CHECK(positions.size() == 10);
}
