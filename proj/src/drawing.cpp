#include "beyondplanar/drawing.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "beyondplanar/errors.hpp"

namespace bp {

std::vector<Point> Drawing::polyline(EdgeId e) const {
    const Edge& ed = graph.edge(e);
    std::vector<Point> pts;
    pts.reserve(bends.at(e).size() + 2);
    pts.push_back(positions.at(ed.u));
    pts.insert(pts.end(), bends[e].begin(), bends[e].end());
    pts.push_back(positions.at(ed.v));
    return pts;
}

Drawing straight_line(const Graph& g, std::vector<Point> positions) {
    return Drawing{g, std::move(positions), std::vector<std::vector<Point>>(g.m())};
}

std::vector<std::vector<std::size_t>> CrossingStructure::per_edge() const {
    std::vector<std::vector<std::size_t>> lists(graph.m());
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        lists.at(crossings[c].a).push_back(c);
        lists.at(crossings[c].b).push_back(c);
    }
    for (EdgeId e = 0; e < lists.size(); ++e) {
        auto param = [&](std::size_t c) -> const Rational& {
            return crossings[c].a == e ? crossings[c].ta : crossings[c].tb;
        };
        std::stable_sort(lists[e].begin(), lists[e].end(),
                         [&](std::size_t x, std::size_t y) { return param(x) < param(y); });
    }
    return lists;
}

std::vector<std::vector<EdgeId>> CrossingStructure::crossers() const {
    auto lists = per_edge();
    std::vector<std::vector<EdgeId>> out(lists.size());
    for (EdgeId e = 0; e < lists.size(); ++e)
        for (std::size_t c : lists[e]) out[e].push_back(crossings[c].a == e ? crossings[c].b : crossings[c].a);
    return out;
}

CrossingStructure make_crossing_structure(Graph g, std::vector<Crossing> crossings) {
    for (auto& c : crossings) {
        if (c.a > c.b) {
            std::swap(c.a, c.b);
            std::swap(c.ta, c.tb);
        }
    }
    std::stable_sort(crossings.begin(), crossings.end(), [](const Crossing& x, const Crossing& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.ta < y.ta;
    });
    return CrossingStructure{std::move(g), std::move(crossings)};
}

namespace {

std::string edge_name(const Graph& g, EdgeId e) {
    return "(" + std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) + ")";
}

std::string point_name(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

struct Hit {
    enum class Kind { none, point, overlap } kind = Kind::none;
    Point p;
    Rational s;  // along the first segment
    Rational t;  // along the second segment
};

Hit intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    Point r = p2 - p1;
    Point s = q2 - q1;
    Point qp = q1 - p1;
    Rational d = cross(r, s);
    Hit hit;
    if (d != 0) {
        Rational a = cross(qp, s) / d;
        Rational b = cross(qp, r) / d;
        if (a < 0 || a > 1 || b < 0 || b > 1) return hit;
        hit.kind = Hit::Kind::point;
        hit.p = lerp(p1, p2, a);
        hit.s = a;
        hit.t = b;
        return hit;
    }
    if (cross(qp, r) != 0) return hit;
    // Collinear: project q onto p's parameter line.
    Rational rr = dot(r, r);
    Rational t0 = dot(qp, r) / rr;
    Rational t1 = dot(q2 - p1, r) / rr;
    Rational lo = std::max(Rational(0), std::min(t0, t1));
    Rational hi = std::min(Rational(1), std::max(t0, t1));
    if (lo > hi) return hit;
    if (lo < hi) {
        hit.kind = Hit::Kind::overlap;
        hit.p = lerp(p1, p2, lo);
        return hit;
    }
    hit.kind = Hit::Kind::point;
    hit.p = lerp(p1, p2, lo);
    hit.s = lo;
    hit.t = dot(hit.p - q1, s) / dot(s, s);
    return hit;
}

struct Box {
    double x0, y0, x1, y1;
    bool overlaps(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
};

Box segment_box(const Point& a, const Point& b) {
    double ax = to_double(a.x), ay = to_double(a.y), bx = to_double(b.x), by = to_double(b.y);
    double eps = 1e-9 * (1 + std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by)}));
    return {std::min(ax, bx) - eps, std::min(ay, by) - eps, std::max(ax, bx) + eps, std::max(ay, by) + eps};
}

Box merge(const Box& a, const Box& b) {
    return {std::min(a.x0, b.x0), std::min(a.y0, b.y0), std::max(a.x1, b.x1), std::max(a.y1, b.y1)};
}

}  // namespace

void validate_drawing(const Drawing& d) {
    const Graph& g = d.graph;
    if (d.positions.size() != static_cast<std::size_t>(g.n()))
        throw GeometryError("drawing needs one position per vertex");
    if (d.bends.size() != g.m()) throw GeometryError("drawing needs one bend list per edge");
    std::map<Point, Vertex> seen;
    for (Vertex v = 0; v < g.n(); ++v) {
        auto [it, fresh] = seen.emplace(d.positions[v], v);
        if (!fresh)
            throw GeometryError("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                                " share the point " + point_name(d.positions[v]));
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto pts = d.polyline(e);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1])
                throw GeometryError("edge " + edge_name(g, e) + " has a zero-length segment at " + point_name(pts[i]));
    }
}

CrossingStructure extract_crossings(const Drawing& d) {
    validate_drawing(d);
    const Graph& g = d.graph;
    const std::size_t m = g.m();
    std::vector<std::vector<Point>> lines(m);
    std::vector<std::vector<Box>> boxes(m);
    std::vector<Box> hull(m);
    for (EdgeId e = 0; e < m; ++e) {
        lines[e] = d.polyline(e);
        for (std::size_t i = 0; i + 1 < lines[e].size(); ++i) {
            boxes[e].push_back(segment_box(lines[e][i], lines[e][i + 1]));
            hull[e] = i == 0 ? boxes[e][0] : merge(hull[e], boxes[e][i]);
        }
    }

    // Self intersections of a polyline.
    for (EdgeId e = 0; e < m; ++e) {
        const auto& pts = lines[e];
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < pts.size(); ++j) {
                if (!boxes[e][i].overlaps(boxes[e][j])) continue;
                Hit h = intersect(pts[i], pts[i + 1], pts[j], pts[j + 1]);
                if (h.kind == Hit::Kind::none) continue;
                if (j == i + 1 && h.kind == Hit::Kind::point && h.s == 1 && h.t == 0) continue;
                throw GeometryError("edge " + edge_name(g, e) + " intersects itself at " + point_name(h.p));
            }
    }

    std::vector<Crossing> found;
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ee = g.edge(e);
        for (EdgeId f = e + 1; f < m; ++f) {
            if (!hull[e].overlaps(hull[f])) continue;
            const Edge& ff = g.edge(f);
            bool adjacent = ee.shares_vertex(ff);
            Vertex shared = adjacent ? (ff.has(ee.u) ? ee.u : ee.v) : -1;
            bool have = false;
            const auto& pe = lines[e];
            const auto& pf = lines[f];
            for (std::size_t i = 0; i + 1 < pe.size(); ++i)
                for (std::size_t j = 0; j + 1 < pf.size(); ++j) {
                    if (!boxes[e][i].overlaps(boxes[f][j])) continue;
                    Hit h = intersect(pe[i], pe[i + 1], pf[j], pf[j + 1]);
                    if (h.kind == Hit::Kind::none) continue;
                    std::string where = edge_name(g, e) + " and " + edge_name(g, f) + " at " + point_name(h.p);
                    if (h.kind == Hit::Kind::overlap) throw GeometryError("collinear overlap of edges " + where);
                    if (adjacent) {
                        bool at_shared = h.p == d.positions[shared];
                        bool end_e = (shared == ee.u) ? (i == 0 && h.s == 0) : (i + 2 == pe.size() && h.s == 1);
                        bool end_f = (shared == ff.u) ? (j == 0 && h.t == 0) : (j + 2 == pf.size() && h.t == 1);
                        if (at_shared && end_e && end_f) continue;
                        throw GeometryError("adjacent edges " + where + " meet away from their common vertex");
                    }
                    if (h.s == 0 || h.s == 1 || h.t == 0 || h.t == 1) {
                        for (Vertex w : {ee.u, ee.v, ff.u, ff.v})
                            if (h.p == d.positions[w])
                                throw GeometryError("vertex " + std::to_string(w) + " lies on edge " +
                                                    edge_name(g, ee.has(w) ? f : e) + " at " + point_name(h.p));
                        throw GeometryError("edges " + where + " touch at a bend");
                    }
                    if (have) throw GeometryError("edges " + where + " cross more than once");
                    have = true;
                    Rational se(static_cast<long>(pe.size() - 1));
                    Rational sf(static_cast<long>(pf.size() - 1));
                    found.push_back({e, f, Rational((Rational(static_cast<long>(i)) + h.s) / se),
                                     Rational((Rational(static_cast<long>(j)) + h.t) / sf), h.p});
                }
        }
    }

    std::map<Point, std::size_t> at;
    for (std::size_t c = 0; c < found.size(); ++c) {
        auto [it, fresh] = at.emplace(*found[c].at, c);
        if (!fresh) {
            const auto& o = found[it->second];
            throw GeometryError("edges " + edge_name(g, o.a) + ", " + edge_name(g, o.b) + ", " +
                                edge_name(g, found[c].a) + ", " + edge_name(g, found[c].b) + " pass through " +
                                point_name(*found[c].at));
        }
    }

    // Isolated vertices are not covered by the segment tests above.
    auto deg = g.degrees();
    for (Vertex w = 0; w < g.n(); ++w) {
        if (deg[w] != 0) continue;
        Box pb = segment_box(d.positions[w], d.positions[w]);
        for (EdgeId e = 0; e < m; ++e) {
            if (!hull[e].overlaps(pb)) continue;
            for (std::size_t i = 0; i + 1 < lines[e].size(); ++i)
                if (on_segment(d.positions[w], lines[e][i], lines[e][i + 1]))
                    throw GeometryError("vertex " + std::to_string(w) + " lies on edge " + edge_name(g, e) + " at " +
                                        point_name(d.positions[w]));
        }
    }
    return make_crossing_structure(g, std::move(found));
}

Drawing convex_drawing(const Graph& g) {
    static constexpr std::array<long, 10> primes{0, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::size_t attempt = 0; attempt < primes.size(); ++attempt) {
        std::vector<Point> pts;
        for (Vertex v = 0; v < g.n(); ++v) {
            Rational t(v + 1);
            if (attempt > 0) t += Rational(1, primes[attempt] * (v + 2));
            pts.emplace_back(t, Rational(t * t));
        }
        Drawing d = straight_line(g, std::move(pts));
        try {
            extract_crossings(d);
            return d;
        } catch (const GeometryError&) {
        }
    }
    throw GeometryError("convex placement stays degenerate after perturbation");
}

Verdict validate_simple(const CrossingStructure& cs) {
    Verdict v = verdict_for("simple");
    const Graph& g = cs.graph;
    std::set<std::pair<EdgeId, EdgeId>> pairs;
    std::map<std::pair<EdgeId, Rational>, std::size_t> spots;
    auto fail = [&](std::string reason, std::vector<EdgeId> edges) {
        v.holds = false;
        v.reason = std::move(reason);
        v.edges = std::move(edges);
        return v;
    };
    for (std::size_t c = 0; c < cs.crossings.size(); ++c) {
        const Crossing& x = cs.crossings[c];
        if (x.a >= g.m() || x.b >= g.m()) return fail("crossing names a missing edge", {});
        if (x.a == x.b) return fail("edge crosses itself", {x.a});
        EdgeId a = std::min(x.a, x.b), b = std::max(x.a, x.b);
        if (g.edge(a).shares_vertex(g.edge(b))) return fail("adjacent edges cross", {a, b});
        if (!pairs.emplace(a, b).second) return fail("pair crosses twice", {a, b});
        for (const Rational* t : {&x.ta, &x.tb})
            if (*t <= 0 || *t >= 1) return fail("crossing parameter outside (0,1)", {a, b});
        if (!spots.emplace(std::make_pair(x.a, x.ta), c).second || !spots.emplace(std::make_pair(x.b, x.tb), c).second)
            return fail("two crossings at the same point of an edge", {a, b});
    }
    return v;
}

namespace {

std::string fmt(double x, int precision) {
    if (x == 0) x = 0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& options) {
    std::vector<std::pair<double, double>> all;
    for (const auto& p : d.positions) all.emplace_back(to_double(p.x), to_double(p.y));
    for (const auto& bl : d.bends)
        for (const auto& p : bl) all.emplace_back(to_double(p.x), to_double(p.y));
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    if (!all.empty()) {
        x0 = x1 = all[0].first;
        y0 = y1 = all[0].second;
        for (auto [x, y] : all) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    double span = std::max({x1 - x0, y1 - y0, 1e-12});
    double scale = options.size / span;
    const double margin = 20;
    double width = (x1 - x0) * scale + 2 * margin;
    double height = (y1 - y0) * scale + 2 * margin;
    int prec = options.precision;
    auto sx = [&](const Rational& x) { return fmt((to_double(x) - x0) * scale + margin, prec); };
    auto sy = [&](const Rational& y) { return fmt((y1 - to_double(y)) * scale + margin, prec); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width, prec) << "\" height=\""
        << fmt(height, prec) << "\" viewBox=\"0 0 " << fmt(width, prec) << " " << fmt(height, prec) << "\">\n";
    out << "<g class=\"edges\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\">\n";
    for (EdgeId e = 0; e < d.graph.m(); ++e) {
        auto pts = d.polyline(e);
        out << "<path data-edge=\"" << d.graph.edge(e).u << "-" << d.graph.edge(e).v << "\"";
        if (auto tag = d.graph.label(e)) out << " class=\"" << *tag << "\"";
        out << " d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i == 0 ? "M" : " L") << sx(pts[i].x) << " " << sy(pts[i].y);
        out << "\"/>\n";
    }
    out << "</g>\n<g class=\"vertices\" fill=\"#1f4e99\">\n";
    for (Vertex v = 0; v < d.graph.n(); ++v)
        out << "<circle data-vertex=\"" << v << "\" cx=\"" << sx(d.positions[v].x) << "\" cy=\""
            << sy(d.positions[v].y) << "\" r=\"3\"/>\n";
    out << "</g>\n";
    if (options.markers) {
        auto cs = extract_crossings(d);
        out << "<g class=\"crossings\" fill=\"#c0392b\">\n";
        for (const auto& c : cs.crossings)
            out << "<rect class=\"crossing\" x=\"" << fmt(std::stod(sx(c.at->x)) - 2, prec) << "\" y=\""
                << fmt(std::stod(sy(c.at->y)) - 2, prec) << "\" width=\"4\" height=\"4\"/>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace bp
