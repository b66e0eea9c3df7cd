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

// Pentagram diagrams: a five-line star with the ten observables at its
// intersection points, surrounded by the five Fano planes of its contexts.
// Negative contexts and negative lines get a heavy stroke. In each Fano inset
// the context occupies the three corners and the centroid of a triangle and
// the line at infinity is the inscribed circle through the side midpoints.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "pentagram/classifier.hpp"
#include "pentagram/enumerator.hpp"

namespace pentagram {

namespace detail {

struct Point2 {
    double x = 0;
    double y = 0;
};

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

// Vertex k of a regular pentagon of the given radius, first vertex on top.
inline Point2 pentagon_vertex(int k, double radius, Point2 center = {}) {
    const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 5;
    return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}

inline Point2 intersect(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
    const double d = (a1.x - a2.x) * (b1.y - b2.y) - (a1.y - a2.y) * (b1.x - b2.x);
    const double ta = a1.x * a2.y - a1.y * a2.x;
    const double tb = b1.x * b2.y - b1.y * b2.x;
    return {(ta * (b1.x - b2.x) - (a1.x - a2.x) * tb) / d, (ta * (b1.y - b2.y) - (a1.y - a2.y) * tb) / d};
}

/// Layout shared by the DOT and SVG emitters.
struct PentagramLayout {
    // Star line k runs through pentagon vertices k and k + 2.
    std::array<std::array<Point2, 2>, 5> star_lines;
    // Point of each observable id on the star; meet of its two contexts.
    std::array<Point2, kPoints + 1> position{};
    // The four points of each context, ordered along its star line.
    std::array<std::array<Observable, 4>, 5> along;
    std::array<ContextProfile, 5> profiles;
    // Inset centers for the Fano planes, outside the star.
    std::array<Point2, 5> inset_center;
};

inline PentagramLayout layout(const Pentagram &p, double radius = 100) {
    PentagramLayout out;
    out.profiles = context_profiles(p);
    for (int k = 0; k < 5; ++k) {
        out.star_lines[static_cast<std::size_t>(k)] = {pentagon_vertex(k, radius), pentagon_vertex(k + 2, radius)};
    }
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            const PointMask meet = p.contexts[i].mask() & p.contexts[j].mask();
            out.position[static_cast<std::size_t>(std::countr_zero(meet))] =
                intersect(out.star_lines[i][0], out.star_lines[i][1], out.star_lines[j][0], out.star_lines[j][1]);
        }
    }
    for (std::size_t k = 0; k < 5; ++k) {
        auto pts = p.contexts[k].points;
        const Point2 a = out.star_lines[k][0];
        const Point2 b = out.star_lines[k][1];
        auto param = [&](Observable o) {
            const Point2 q = out.position[static_cast<std::size_t>(o.id())];
            return (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
        };
        std::sort(pts.begin(), pts.end(), [&](Observable u, Observable v) { return param(u) < param(v); });
        out.along[k] = pts;
        // Inset sits beyond the midpoint of the star line, away from the center.
        const Point2 mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        const double len = std::hypot(mid.x, mid.y);
        out.inset_center[k] = {-mid.x / len * radius * 2.2, -mid.y / len * radius * 2.2};
    }
    return out;
}

// Fano inset geometry: context point 0 at the centroid, points 1..3 at the
// corners, each line-at-infinity point at the midpoint of the opposite side.
inline std::array<std::pair<Observable, Point2>, 7> fano_positions(const Context &c, Point2 center, double size) {
    std::array<std::pair<Observable, Point2>, 7> out;
    out[0] = {c.points[0], center};
    std::array<Point2, 3> corner;
    for (int k = 0; k < 3; ++k) {
        const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
        corner[static_cast<std::size_t>(k)] = {center.x + size * std::cos(angle), center.y + size * std::sin(angle)};
        out[static_cast<std::size_t>(k + 1)] = {c.points[static_cast<std::size_t>(k + 1)], corner[static_cast<std::size_t>(k)]};
    }
    for (int k = 0; k < 3; ++k) {
        const auto u = static_cast<std::size_t>((k + 1) % 3);
        const auto v = static_cast<std::size_t>((k + 2) % 3);
        out[static_cast<std::size_t>(k + 4)] = {c.points[u + 1] + c.points[v + 1],
                                                {(corner[u].x + corner[v].x) / 2, (corner[u].y + corner[v].y) / 2}};
    }
    return out;
}

inline std::string dot_pos(Point2 p) {
    // Graphviz y grows upward; keep the same orientation as the SVG output.
    return "\"" + fmt2(p.x / 72) + "," + fmt2(-p.y / 72) + "!\"";
}

}  // namespace detail

/// Graphviz document (render with `neato -n` or `fdp`; positions are pinned).
///
/// Star segments carry `context=k` and `negative=true|false`; a context is a
/// heavy edge iff it is negative. Fano-plane edges carry `plane=k`; the line
/// at infinity is drawn dashed with `infinity=true`.
inline std::string to_dot(const Pentagram &p, const std::string &title = "pentagram") {
    const detail::PentagramLayout lay = detail::layout(p);
    std::string out = "graph \"" + title + "\" {\n";
    out += "  graph [layout=neato, splines=line, outputorder=edgesfirst];\n";
    out += "  node [shape=box, style=rounded, fontname=\"Helvetica\", fontsize=10];\n";
    for (Observable o : p.points) {
        out += "  p" + std::to_string(o.id()) + " [label=\"" + o.label() + "\", kind=\"" + kind_char(o.kind()) +
               "\", pos=" + detail::dot_pos(lay.position[static_cast<std::size_t>(o.id())]) + "];\n";
    }
    for (std::size_t k = 0; k < 5; ++k) {
        const Context &c = p.contexts[k];
        const bool negative = c.sign == Sign::Negative;
        for (std::size_t s = 0; s + 1 < 4; ++s) {
            out += "  p" + std::to_string(lay.along[k][s].id()) + " -- p" + std::to_string(lay.along[k][s + 1].id()) +
                   " [context=" + std::to_string(k) + ", negative=" + (negative ? "true" : "false") +
                   ", penwidth=" + (negative ? "4" : "1") + "];\n";
        }
    }
    for (std::size_t k = 0; k < 5; ++k) {
        const ContextProfile &prof = lay.profiles[k];
        const auto placed = detail::fano_positions(prof.context, lay.inset_center[k], 45);
        const std::string prefix = "f" + std::to_string(k) + "_";
        out += "  subgraph cluster_plane" + std::to_string(k) + " {\n";
        out += "    label=\"context " + std::to_string(k) + ": " + (prof.context.sign == Sign::Negative ? "-" : "+") +
               ", plane " + std::string(plane_class_name(prof.plane.plane_class)) + "\";\n";
        out += "    plane_class=\"" + std::string(plane_class_name(prof.plane.plane_class)) + "\";\n";
        const auto inf = prof.context.line_at_infinity();
        for (const auto &[o, pos] : placed) {
            const bool at_infinity = std::find(inf.begin(), inf.end(), o) != inf.end();
            out += "    " + prefix + std::to_string(o.id()) + " [label=\"" + o.label() + "\", shape=" +
                   (at_infinity ? "ellipse" : "box") + ", pos=" + detail::dot_pos(pos) + "];\n";
        }
        for (const IsotropicLine &line : prof.plane.lines) {
            const bool at_infinity = line.points == inf;
            const bool negative = line.sign == Sign::Negative;
            std::string attrs = "plane=" + std::to_string(k) + ", negative=" + (negative ? "true" : "false") +
                                ", infinity=" + (at_infinity ? "true" : "false") + ", penwidth=" + (negative ? "3" : "1");
            if (at_infinity) {
                attrs += ", style=dashed";
            }
            // Three collinear points: connect them as a path in drawing order.
            std::array<Observable, 3> pts = line.points;
            auto where = [&](Observable o) {
                for (const auto &[q, pos] : placed) {
                    if (q == o) {
                        return pos;
                    }
                }
                return detail::Point2{};
            };
            if (!at_infinity) {
                // Middle point goes in the middle: it is opposite the longest pairwise distance.
                auto dist = [&](std::size_t i, std::size_t j) {
                    const auto a = where(pts[i]);
                    const auto b = where(pts[j]);
                    return std::hypot(a.x - b.x, a.y - b.y);
                };
                if (dist(0, 1) > dist(0, 2) && dist(0, 1) > dist(1, 2)) {
                    std::swap(pts[1], pts[2]);
                } else if (dist(1, 2) > dist(0, 2) && dist(1, 2) > dist(0, 1)) {
                    std::swap(pts[0], pts[1]);
                }
            }
            for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
                out += "    " + prefix + std::to_string(pts[s].id()) + " -- " + prefix + std::to_string(pts[s + 1].id()) +
                       " [" + attrs + "];\n";
            }
            if (at_infinity) {
                out += "    " + prefix + std::to_string(pts[2].id()) + " -- " + prefix + std::to_string(pts[0].id()) +
                       " [" + attrs + "];\n";
            }
        }
        out += "  }\n";
    }
    out += "}\n";
    return out;
}

/// Standalone SVG with the same layout as to_dot.
inline std::string to_svg(const Pentagram &p) {
    using detail::fmt2;
    const detail::PentagramLayout lay = detail::layout(p);
    const double half = 360;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt2(-half) + " " + fmt2(-half) + " " +
                      fmt2(2 * half) + " " + fmt2(2 * half) + "\" font-family=\"Helvetica\" font-size=\"9\">\n";
    auto line = [&](detail::Point2 a, detail::Point2 b, double width, const std::string &cls) {
        out += "  <line class=\"" + cls + "\" x1=\"" + fmt2(a.x) + "\" y1=\"" + fmt2(-a.y) + "\" x2=\"" + fmt2(b.x) +
               "\" y2=\"" + fmt2(-b.y) + "\" stroke=\"black\" stroke-width=\"" + fmt2(width) + "\"/>\n";
    };
    auto label = [&](detail::Point2 at, const std::string &text) {
        out += "  <text x=\"" + fmt2(at.x) + "\" y=\"" + fmt2(-at.y) +
               "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"black\" stroke=\"white\" stroke-width=\"3\" "
               "paint-order=\"stroke\">" +
               text + "</text>\n";
    };
    for (std::size_t k = 0; k < 5; ++k) {
        const bool negative = p.contexts[k].sign == Sign::Negative;
        const auto &a = lay.along[k];
        line(lay.position[static_cast<std::size_t>(a.front().id())], lay.position[static_cast<std::size_t>(a.back().id())],
             negative ? 4 : 1, negative ? "context negative" : "context");
    }
    for (Observable o : p.points) {
        label(lay.position[static_cast<std::size_t>(o.id())], o.label());
    }
    for (std::size_t k = 0; k < 5; ++k) {
        const ContextProfile &prof = lay.profiles[k];
        const auto placed = detail::fano_positions(prof.context, lay.inset_center[k], 45);
        auto where = [&](Observable o) {
            for (const auto &[q, pos] : placed) {
                if (q == o) {
                    return pos;
                }
            }
            return detail::Point2{};
        };
        const auto inf = prof.context.line_at_infinity();
        for (const IsotropicLine &l : prof.plane.lines) {
            const bool negative = l.sign == Sign::Negative;
            if (l.points == inf) {
                const auto c = lay.inset_center[k];
                out += "  <circle class=\"infinity" + std::string(negative ? " negative" : "") + "\" cx=\"" + fmt2(c.x) +
                       "\" cy=\"" + fmt2(-c.y) + "\" r=\"" + fmt2(45 / 2.0) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
                       (negative ? "3" : "1") + "\"/>\n";
                continue;
            }
            // Extreme pair of the three collinear points spans the segment.
            double best = -1;
            std::pair<detail::Point2, detail::Point2> seg;
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = i + 1; j < 3; ++j) {
                    const auto a = where(l.points[i]);
                    const auto b = where(l.points[j]);
                    const double d = std::hypot(a.x - b.x, a.y - b.y);
                    if (d > best) {
                        best = d;
                        seg = {a, b};
                    }
                }
            }
            line(seg.first, seg.second, negative ? 3 : 1, negative ? "fano negative" : "fano");
        }
        for (const auto &[o, pos] : placed) {
            label(pos, o.label());
        }
        const auto c = lay.inset_center[k];
        label({c.x, c.y - 62}, std::string(prof.context.sign == Sign::Negative ? "- context, " : "+ context, ") + "plane " +
                                   std::string(plane_class_name(prof.plane.plane_class)));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace pentagram
