#include "beyondplanar/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "beyondplanar/checkers.hpp"
#include "beyondplanar/errors.hpp"
#include "beyondplanar/operations.hpp"

namespace bp {

namespace {

Rational q(long num, long den = 1) { return ratio(num, den); }

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Scales d to L-infinity norm one.
Point unit_inf(const Point& d) {
    Rational s = std::max(abs_q(d.x), abs_q(d.y));
    if (s == 0) return d;
    return Rational(1 / s) * d;
}

void require_min_degree3(const Graph& g) {
    auto deg = g.degrees();
    for (Vertex v = 0; v < g.n(); ++v)
        if (deg[v] < 3)
            throw InputError("node-to-circle expansion needs minimum degree 3; vertex " + std::to_string(v) +
                             " has degree " + std::to_string(deg[v]));
}

// Interior point of box v near its top left corner, so that straight pieces
// from it to the bends cross what the box routes cross. The tiny offset keeps
// any two pieces at it non-collinear.
Point box_center(const BoxVisibility& bv, Vertex v) {
    long delta_den = 2L * bv.spacing * bv.graph.n() + 1;
    return Point(Rational(bv.box_lo[v].x + q(1, 2)), Rational(bv.box_hi[v].y - q(1, delta_den)));
}

}  // namespace

BoxVisibility build_box_visibility(const Graph& g) {
    BoxVisibility bv;
    bv.graph = g;
    const int n = g.n();
    bv.width = std::max(n, 2);
    bv.spacing = bv.width + 2;
    for (Vertex v = 0; v < n; ++v) {
        Rational lo(static_cast<long>(bv.spacing) * v);
        bv.box_lo.emplace_back(lo, lo);
        bv.box_hi.emplace_back(Rational(lo + bv.width), Rational(lo + bv.width));
    }
    const std::size_t m = g.m();
    bv.top_slot.assign(m, 0);
    bv.left_slot.assign(m, 0);
    auto adj = g.adjacency();
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        // Higher targets leave further left; lower sources enter higher up.
        int top = 0, left = 0;
        for (Vertex w : adj[ed.u])
            if (w > ed.v) ++top;
        for (Vertex w : adj[ed.v])
            if (w < ed.u) ++left;
        bv.top_slot[e] = top;
        bv.left_slot[e] = left;
        Rational x = bv.box_lo[ed.u].x + top + 1;
        Rational y = bv.box_hi[ed.v].y - (left + 1);
        bv.port.emplace_back(x, bv.box_hi[ed.u].y);
        bv.bend.emplace_back(x, y);
        bv.entry.emplace_back(bv.box_lo[ed.v].x, y);
    }
    return bv;
}

std::vector<std::pair<EdgeId, EdgeId>> box_visibility_crossings(const BoxVisibility& bv) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    const Graph& g = bv.graph;
    for (EdgeId a = 0; a < g.m(); ++a)
        for (EdgeId b = a + 1; b < g.m(); ++b) {
            const Edge& e = g.edge(a);
            const Edge& f = g.edge(b);
            if ((e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v)) out.emplace_back(a, b);
        }
    return out;
}

Drawing fcf_2subdivision(const Graph& g) {
    Drawing base = convex_drawing(g);
    CrossingStructure cs = extract_crossings(base);
    Rational eps = q(1, 3);
    for (const auto& c : cs.crossings)
        for (const Rational& t : {c.ta, c.tb}) eps = std::min({eps, Rational(t / 2), Rational((1 - t) / 2)});
    auto sub = subdivide(g, 2);
    std::vector<Point> pos = base.positions;
    pos.resize(static_cast<std::size_t>(sub.result.n()));
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Point& a = base.positions[g.edge(e).u];
        const Point& b = base.positions[g.edge(e).v];
        pos[g.n() + 2 * e] = lerp(a, b, eps);
        pos[g.n() + 2 * e + 1] = lerp(a, b, 1 - eps);
    }
    return straight_line(sub.result, std::move(pos));
}

Drawing quasi_1subdivision(const Graph& g) {
    BoxVisibility bv = build_box_visibility(g);
    auto sub = subdivide(g, 1);
    std::vector<Point> pos;
    for (Vertex v = 0; v < g.n(); ++v) pos.push_back(box_center(bv, v));
    for (EdgeId e = 0; e < g.m(); ++e) pos.push_back(bv.bend[e]);
    return straight_line(sub.result, std::move(pos));
}

Drawing rac_3bend(const Graph& g) {
    BoxVisibility bv = build_box_visibility(g);
    std::vector<Point> pos;
    for (Vertex v = 0; v < g.n(); ++v) pos.push_back(box_center(bv, v));
    std::vector<std::vector<Point>> bends;
    for (EdgeId e = 0; e < g.m(); ++e) bends.push_back({bv.port[e], bv.bend[e], bv.entry[e]});
    return Drawing{g, std::move(pos), std::move(bends)};
}

Drawing boxvis_n2c_quasi(const Graph& g) {
    require_min_degree3(g);
    BoxVisibility bv = build_box_visibility(g);
    auto adj = g.adjacency();
    Rotation rot(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> in, out;
        for (Vertex w : adj[v]) (w < v ? in : out).push_back(w);
        std::reverse(in.begin(), in.end());
        std::reverse(out.begin(), out.end());
        rot[v] = in;
        rot[v].insert(rot[v].end(), out.begin(), out.end());
    }
    Graph rotated = g.with_rotation(rot);
    Graph eta = node_to_circle(rotated).result;

    std::vector<Vertex> offset(static_cast<std::size_t>(g.n()) + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + static_cast<Vertex>(adj[v].size());
    std::vector<Point> pos(static_cast<std::size_t>(eta.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        // Height of every circle point: the entry height of an in-edge, the
        // bend height of an out-edge.
        std::vector<Rational> ys;
        for (Vertex w : rot[v]) ys.push_back(bv.bend[g.edge_id(v, w)].y);
        Rational lo = *std::min_element(ys.begin(), ys.end());
        Rational hi = *std::max_element(ys.begin(), ys.end());
        const Rational& X = bv.box_lo[v].x;
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            Rational s = hi == lo ? Rational(0) : Rational(2 * (ys[i] - lo) / (hi - lo) - 1);
            Rational bulge = 1 - s * s;
            Rational x = rot[v][i] < v ? Rational(X - bulge / 2) : Rational(X + 1 + (bv.width - 2) * bulge);
            pos[offset[v] + static_cast<Vertex>(i)] = Point(x, ys[i]);
        }
    }
    return straight_line(eta, std::move(pos));
}

Drawing n2c_transform(const Drawing& d, const std::string& class_tag) {
    if (class_tag == "fan")
        throw InputError("node-to-circle transform does not claim to preserve the fan-crossing property");
    const Graph& g = d.graph;
    require_min_degree3(g);
    CrossingStructure cs = extract_crossings(d);
    const std::size_t m = g.m();
    std::vector<std::vector<Point>> lines(m);
    for (EdgeId e = 0; e < m; ++e) lines[e] = d.polyline(e);

    // First segment of edge e as seen from its endpoint v.
    auto first_point = [&](EdgeId e, Vertex v) {
        const auto& pl = lines[e];
        return g.edge(e).u == v ? pl[1] : pl[pl.size() - 2];
    };

    std::vector<Rotation::value_type> rot(static_cast<std::size_t>(g.n()));
    std::vector<std::map<Vertex, Point>> circle_pos(static_cast<std::size_t>(g.n()));
    auto adj = g.adjacency();
    for (Vertex v = 0; v < g.n(); ++v) {
        const Point& pv = d.positions[v];
        // Squared clearance around v.
        std::optional<Rational> r2;
        auto relax = [&](const Rational& x) {
            if (!r2 || x < *r2) r2 = x;
        };
        for (Vertex w = 0; w < g.n(); ++w)
            if (w != v) relax(norm2(d.positions[w] - pv));
        for (EdgeId e = 0; e < m; ++e) {
            const auto& pl = lines[e];
            if (!g.edge(e).has(v)) {
                for (std::size_t i = 0; i + 1 < pl.size(); ++i) relax(dist2_point_segment(pv, pl[i], pl[i + 1]));
                continue;
            }
            // Segments after the first one, seen from v.
            std::vector<Point> from_v = pl;
            if (g.edge(e).v == v) std::reverse(from_v.begin(), from_v.end());
            for (std::size_t i = 1; i + 1 < from_v.size(); ++i) relax(dist2_point_segment(pv, from_v[i], from_v[i + 1]));
        }
        for (const auto& c : cs.crossings)
            if (c.at && (g.edge(c.a).has(v) || g.edge(c.b).has(v))) relax(norm2(*c.at - pv));

        std::vector<std::pair<Point, Vertex>> rays;
        for (Vertex w : adj[v]) rays.emplace_back(first_point(g.edge_id(v, w), v) - pv, w);
        std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        const std::size_t k = rays.size();
        for (const auto& r : rays) rot[v].push_back(r.second);

        // Ray multipliers relative to mu: uniform unless one angular gap
        // exceeds a half turn, then the interior rays end on a common line.
        std::vector<Rational> factor(k, Rational(1));
        for (std::size_t i = 0; i < k; ++i) {
            const Point& a = rays[i].first;
            const Point& b = rays[(i + 1) % k].first;
            if (cross(a, b) < 0) {
                std::vector<std::size_t> chain;
                for (std::size_t j = 1; j <= k; ++j) chain.push_back((i + j) % k);
                const Point& q1 = rays[chain.front()].first;
                const Point& qd = rays[chain.back()].first;
                for (std::size_t j = 1; j + 1 < k; ++j) {
                    const Point& r = rays[chain[j]].first;
                    factor[chain[j]] = 2 * cross(q1, qd) / cross(r, qd - q1);
                }
                break;
            }
        }
        Rational mu = q(1, 2);
        auto too_big = [&]() {
            for (std::size_t i = 0; i < k; ++i)
                if (4 * norm2(Rational(mu * factor[i]) * rays[i].first) >= *r2) return true;
            return false;
        };
        while (too_big()) mu /= 2;
        for (std::size_t i = 0; i < k; ++i)
            circle_pos[v][rays[i].second] = pv + Rational(mu * factor[i]) * rays[i].first;
    }

    Graph rotated = g.with_rotation(rot);
    Graph eta = node_to_circle(rotated).result;
    std::vector<Point> pos(static_cast<std::size_t>(eta.n()));
    std::vector<std::vector<Point>> bends(eta.m());
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : adj[v]) pos[circle_vertex(rotated, v, w)] = circle_pos[v][w];
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        EdgeId b = eta.edge_id(circle_vertex(rotated, ed.u, ed.v), circle_vertex(rotated, ed.v, ed.u));
        bends[b] = d.bends[e];
    }
    return Drawing{eta, std::move(pos), std::move(bends)};
}

Drawing convex_n2c_fcf(const Graph& g) {
    require_min_degree3(g);
    return n2c_transform(convex_drawing(g));
}

PathClass parse_path_class(const std::string& tag) {
    if (tag == "fcf") return {PathClass::Kind::fcf, 1};
    if (tag == "quasi3") return {PathClass::Kind::quasi3, 3};
    std::string digits;
    if (tag.rfind("kgap", 0) == 0) digits = tag.substr(4);
    else if (tag.size() > 4 && tag.substr(tag.size() - 4) == "-gap") digits = tag.substr(0, tag.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 6) {
        int k = std::stoi(digits);
        if (k >= 1) return {PathClass::Kind::kgap, k};
    }
    throw InputError("unknown path class '" + tag + "' (expected fcf, quasi3, kgap<k> or <k>-gap)");
}

std::string to_string(const PathClass& cls) {
    switch (cls.kind) {
    case PathClass::Kind::fcf: return "fcf";
    case PathClass::Kind::quasi3: return "quasi3";
    case PathClass::Kind::kgap: return "kgap" + std::to_string(cls.k);
    }
    return "";
}

namespace {

Verdict check_class(const CrossingStructure& cs, const PathClass& cls) {
    switch (cls.kind) {
    case PathClass::Kind::fcf: return check_fcf(cs);
    case PathClass::Kind::quasi3: return check_quasi(cs, 3);
    case PathClass::Kind::kgap: return check_k_gap(cs, cls.k);
    }
    return {};
}

struct Hit {
    enum class Kind { none, proper, touch };
    Kind kind = Kind::none;
    Rational t;  // along the first segment
    Point at;
};

Hit segment_hit(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    int o1 = orientation(p1, p2, q1);
    int o2 = orientation(p1, p2, q2);
    int o3 = orientation(q1, q2, p1);
    int o4 = orientation(q1, q2, p2);
    Hit h;
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        Point r = p2 - p1;
        Point s = q2 - q1;
        h.kind = Hit::Kind::proper;
        h.t = cross(q1 - p1, s) / cross(r, s);
        h.at = lerp(p1, p2, h.t);
        return h;
    }
    if (on_segment(q1, p1, p2) || on_segment(q2, p1, p2) || on_segment(p1, q1, q2) || on_segment(p2, q1, q2))
        h.kind = Hit::Kind::touch;
    return h;
}

using Key = std::pair<Rational, Rational>;
Key key(const Point& p) { return {p.x, p.y}; }

// Point at global parameter T (segment index + local t) of a polyline.
Point along(const std::vector<Point>& poly, const Rational& T) {
    mpz_class whole = T.get_num() / T.get_den();
    long k = std::min<long>(whole.get_si(), static_cast<long>(poly.size()) - 2);
    return lerp(poly[static_cast<std::size_t>(k)], poly[static_cast<std::size_t>(k) + 1], Rational(T - k));
}

}  // namespace

Drawing route_path(const Drawing& d, Vertex u, Vertex v, const PathClass& cls) {
    const Graph& g = d.graph;
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw InputError("path endpoint out of range");
    if (u == v) throw InputError("path endpoints must differ");
    if (cls.kind == PathClass::Kind::kgap && cls.k < 1) throw InputError("gap class needs k >= 1");
    CrossingStructure cs = extract_crossings(d);
    Verdict before = check_class(cs, cls);
    if (!before.holds) throw InputError("input drawing is not " + to_string(cls) + ": " + before.reason);

    std::set<Key> crossing_points;
    for (const auto& c : cs.crossings)
        if (c.at) crossing_points.insert(key(*c.at));
    std::vector<std::vector<Point>> lines(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) lines[e] = d.polyline(e);
    const Point& pu = d.positions[u];
    const Point& pv = d.positions[v];

    // The drawing of a shortest u-v path, or the straight segment when v is unreachable.
    std::vector<Point> spine{pu};
    std::vector<Vertex> S = shortest_path(g, u, v);
    for (std::size_t j = 0; j + 1 < S.size(); ++j) {
        auto pl = lines[g.edge_id(S[j], S[j + 1])];
        if (S[j] > S[j + 1]) std::reverse(pl.begin(), pl.end());
        spine.insert(spine.end(), pl.begin() + 1, pl.end());
    }
    if (S.empty()) spine.push_back(pv);
    if (spine.size() == 2) spine.insert(spine.begin() + 1, lerp(pu, pv, q(1, 2)));

    Rational delta;
    bool first = true;
    for (std::size_t j = 0; j + 1 < spine.size(); ++j) {
        Point dj = spine[j + 1] - spine[j];
        Rational len = std::max(abs_q(dj.x), abs_q(dj.y));
        if (first || len < delta) delta = len;
        first = false;
    }
    delta /= 8;

    for (int attempt = 0; attempt < 80; ++attempt, delta /= 3) {
        std::vector<Point> gamma{pu};
        for (std::size_t j = 1; j + 1 < spine.size(); ++j)
            gamma.push_back(spine[j] + delta * unit_inf(rot_ccw(spine[j + 1] - spine[j - 1])));
        gamma.push_back(pv);
        const std::size_t L = gamma.size() - 1;

        bool bad = false;
        // Crossings with the drawing as (global parameter, point).
        std::vector<std::pair<Rational, Point>> hits;
        std::set<Key> seen;
        for (std::size_t k = 0; k < L && !bad; ++k) {
            const Point& a = gamma[k];
            const Point& b = gamma[k + 1];
            for (Vertex w = 0; w < g.n() && !bad; ++w) {
                const Point& pw = d.positions[w];
                if ((k == 0 && w == u) || (k + 1 == L && w == v)) continue;
                if (on_segment(pw, a, b)) bad = true;
            }
            for (EdgeId e = 0; e < g.m() && !bad; ++e) {
                const auto& pl = lines[e];
                for (std::size_t i = 0; i + 1 < pl.size() && !bad; ++i) {
                    Hit h = segment_hit(a, b, pl[i], pl[i + 1]);
                    if (h.kind == Hit::Kind::none) continue;
                    if (h.kind == Hit::Kind::touch) {
                        // Sharing only the path endpoint with an incident edge is fine.
                        const Point* shared = nullptr;
                        if (k == 0 && g.edge(e).has(u)) shared = &pu;
                        if (k + 1 == L && g.edge(e).has(v)) shared = &pv;
                        bool ok = shared && (pl[i] == *shared || pl[i + 1] == *shared) &&
                                  orientation(a, b, pl[i] == *shared ? pl[i + 1] : pl[i]) != 0;
                        if (!ok) bad = true;
                        continue;
                    }
                    if (crossing_points.count(key(h.at)) || !seen.insert(key(h.at)).second) {
                        bad = true;
                        continue;
                    }
                    hits.emplace_back(Rational(h.t + static_cast<long>(k)), h.at);
                }
            }
        }
        for (std::size_t k = 0; k < L && !bad; ++k)
            for (std::size_t k2 = k + 1; k2 < L && !bad; ++k2) {
                if (k2 == k + 1) {
                    const Point& a = gamma[k];
                    const Point& b = gamma[k + 1];
                    const Point& c = gamma[k + 2];
                    if (orientation(a, b, c) == 0 && dot(b - a, c - b) < 0) bad = true;
                    continue;
                }
                // The path may cross itself where the spine does.
                Hit h = segment_hit(gamma[k], gamma[k + 1], gamma[k2], gamma[k2 + 1]);
                if (h.kind == Hit::Kind::touch || (h.kind == Hit::Kind::proper &&
                                                   (crossing_points.count(key(h.at)) || !seen.insert(key(h.at)).second))) {
                    bad = true;
                } else if (h.kind == Hit::Kind::proper) {
                    hits.emplace_back(Rational(h.t + static_cast<long>(k)), h.at);
                    Hit back = segment_hit(gamma[k2], gamma[k2 + 1], gamma[k], gamma[k + 1]);
                    hits.emplace_back(Rational(back.t + static_cast<long>(k2)), h.at);
                }
            }
        if (bad) continue;

        std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        // Path vertices: one before the first crossing, two between
        // consecutive crossings, one after the last.
        std::vector<Rational> stops{Rational(0)};
        if (hits.empty()) {
            stops.push_back(Rational(static_cast<long>(L)) / 2);
        } else {
            stops.push_back(hits.front().first / 2);
            for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
                Rational span = hits[i + 1].first - hits[i].first;
                stops.push_back(hits[i].first + span / 3);
                stops.push_back(hits[i].first + 2 * span / 3);
            }
            stops.push_back((hits.back().first + static_cast<long>(L)) / 2);
        }
        stops.push_back(Rational(static_cast<long>(L)));
        const int len = static_cast<int>(stops.size()) - 1;

        Graph out = add_path(g, u, v, len).result;
        std::vector<Point> pos = d.positions;
        std::vector<Vertex> ids{u};
        for (int i = 1; i < len; ++i) {
            pos.push_back(along(gamma, stops[static_cast<std::size_t>(i)]));
            ids.push_back(g.n() + i - 1);
        }
        ids.push_back(v);
        std::vector<std::vector<Point>> bends(out.m());
        for (EdgeId e = 0; e < g.m(); ++e) bends[out.edge_id(g.edge(e).u, g.edge(e).v)] = d.bends[e];
        for (int i = 0; i < len; ++i) {
            std::vector<Point> inner;
            for (std::size_t k = 1; k < L; ++k) {
                Rational T(static_cast<long>(k));
                if (T > stops[static_cast<std::size_t>(i)] && T < stops[static_cast<std::size_t>(i) + 1])
                    inner.push_back(gamma[k]);
            }
            Vertex a = ids[static_cast<std::size_t>(i)];
            Vertex b = ids[static_cast<std::size_t>(i) + 1];
            if (a > b) std::reverse(inner.begin(), inner.end());
            bends[out.edge_id(a, b)] = std::move(inner);
        }
        Drawing result{out, std::move(pos), std::move(bends)};
        try {
            extract_crossings(result);
        } catch (const GeometryError&) {
            continue;
        }
        return result;
    }
    throw GeometryError("could not route a non-degenerate path between " + std::to_string(u) + " and " +
                        std::to_string(v));
}

namespace {

std::vector<Point> nested_positions(int k) {
    const Point base[3] = {Point(q(0), q(2)), Point(q(-2), q(-1)), Point(q(2), q(-1))};
    std::vector<Point> pos;
    for (int i = 0; i < k; ++i)
        for (const auto& p : base) pos.push_back(q(k - i + 1) * p);
    return pos;
}

// Intersection of the lines through a, b and c, d.
Point meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rational t = cross(c - a, d - c) / cross(b - a, d - c);
    return lerp(a, b, t);
}

Point centroid(const Point& a, const Point& b, const Point& c) { return q(1, 3) * (a + b + c); }

}  // namespace

Drawing draw_nested(int k) { return straight_line(gen::nested(k), nested_positions(k)); }

Drawing draw_hermit(int k) {
    Graph g = gen::hermit(k);
    std::vector<Point> pos = nested_positions(k);
    pos.resize(static_cast<std::size_t>(g.n()));
    std::vector<std::vector<Point>> bends(g.m());
    auto route = [&](Vertex a, Vertex b, std::vector<Point> pts) {
        if (a > b) std::reverse(pts.begin(), pts.end());
        bends[g.edge_id(a, b)] = std::move(pts);
    };
    for (int i = 0; i + 1 < k; ++i) {
        Point o[3], in[3];
        for (int s = 0; s < 3; ++s) {
            o[s] = pos[3 * i + s];
            in[s] = pos[3 * (i + 1) + s];
        }
        // Face of the quadrangle between sides s and s+1 that touches the
        // connecting edge of corner `at`.
        auto face = [&](int s, int at) {
            int t = (s + 1) % 3;
            Point x = meet(o[s], in[t], o[t], in[s]);
            return centroid(o[at], in[at], x);
        };
        // Hermits a and b share the first quadrangle, hermit c lies in the second.
        Vertex h0 = gen::hermit_vertex(k, i, 0), h1 = gen::hermit_vertex(k, i, 1), h2 = gen::hermit_vertex(k, i, 2);
        pos[h0] = face(0, 0);
        pos[h1] = face(0, 1);
        pos[h2] = face(1, 2);
        // Two points just either side of the midpoint of connecting edge s,
        // the first one on the side of `from`.
        auto across = [&](int s, const Point& from) {
            Point m = lerp(o[s], in[s], q(1, 2));
            Point n = q(1, 64) * rot_ccw(in[s] - o[s]);
            Point p1 = m + n, p2 = m - n;
            if (orientation(o[s], in[s], p1) != orientation(o[s], in[s], from)) std::swap(p1, p2);
            return std::vector<Point>{p1, p2};
        };
        route(h1, h2, across(1, pos[h1]));
        auto via_a = across(0, pos[h0]);
        auto via_c = across(2, face(2, 2));
        route(h0, h2, {via_a[0], via_a[1], via_c[0], via_c[1]});
    }
    pos[6 * k - 3] = Point(q(0), q(3 * (k + 1)));
    pos[6 * k - 2] = Point(q(0), q(0));
    return Drawing{g, std::move(pos), std::move(bends)};
}

Drawing draw_xw(int k) {
    Graph g = gen::xw(k);
    const long N = 2L * k - 1;
    const Rational top = q(8 * N * N + 8);
    const Point pole_q(q(0), top);
    auto rim_x = [&](long j) { return j == 0 ? q(-N) : q(N - 2 * (j - 1)); };
    std::vector<Point> pos(static_cast<std::size_t>(g.n()));
    for (long j = 0; j < 2L * k; ++j) {
        Rational x = rim_x(j);
        pos[2 + j] = Point(x, Rational(N * N - x * x));
    }
    pos[1] = pole_q;
    Point sum(q(0), q(0));
    for (long j = 0; j < 2L * k; j += 2) sum = sum + pos[2 + j];
    pos[0] = q(1, k) * sum;

    std::vector<std::vector<Point>> bends(g.m());
    auto rim = [&](long j) { return static_cast<Vertex>(2 + j); };
    // Odd chords pass just outside the rim above their middle vertex and cross
    // the edge from the outer pole to it.
    for (long i = 1; i + 2 <= 2L * k - 1; i += 2) {
        const Point& mid = pos[rim(i + 1)];
        Rational t = Rational(q(N + 1) / (top - mid.y));
        bends[g.edge_id(rim(i), rim(i + 2))] = {lerp(mid, pole_q, t) + Point(q(1, 4), q(0))};
    }
    // The last odd chord goes around r_0 and under the rim.
    const Point& last = pos[rim(2L * k - 1)];
    std::vector<Point> around{Point(q(-N - 1), last.y), Point(q(-N - 1), q(-1)), Point(q(N + 1), q(-1))};
    bends[g.edge_id(rim(1), rim(2L * k - 1))] = {around.rbegin(), around.rend()};
    return Drawing{g, std::move(pos), std::move(bends)};
}

Drawing draw_tile() {
    Graph g = gen::king(5, 5);
    std::vector<Point> pos;
    for (int v = 0; v < 25; ++v) pos.emplace_back(q(v % 5), q(v / 5));
    return straight_line(g, std::move(pos));
}

Drawing draw_tiles(const gen::TilesSpec& input) {
    gen::TilesSpec spec = gen::normalized(input);
    Graph g = gen::tiles(spec);

    // Endpoint checks and the slot u of every path end at its vertex.
    std::map<Vertex, int> ends_at;
    std::map<std::pair<int, int>, Vertex> column_owner;  // (tile, local x) -> endpoint
    for (auto [a, b] : spec.pairs)
        for (Vertex c : {a, b}) {
            int lx = c % 25 % 5, ly = c % 25 / 5;
            if (lx > 3 || ly > 3)
                throw InputError("tiles drawing needs endpoint local coordinates at most 3; vertex " + std::to_string(c) +
                                 " is at (" + std::to_string(lx) + "," + std::to_string(ly) + ")");
            auto [it, fresh] = column_owner.emplace(std::make_pair(c / 25, lx), c);
            if (!fresh && it->second != c)
                throw InputError("tiles drawing needs the endpoints of a tile in distinct columns; " +
                                 std::to_string(it->second) + " and " + std::to_string(c) + " share one");
            ends_at[c] += spec.paths_per_pair;
        }
    std::map<Vertex, int> next_slot;
    auto slot = [&](Vertex c) {
        int j = next_slot[c]++;
        return Rational(q(1, 32) + q(3, 16) * q(j + 1, ends_at[c] + 1));
    };
    auto corner = [&](Vertex c) { return Point(q(6 * (c / 25) + c % 25 % 5), q(c % 25 / 5)); };
    // Points from the endpoint up to the top of the tile, endpoint excluded.
    // Slanted pieces cross the cell diagonals at right angles.
    auto climb = [&](Vertex c, const Rational& u) {
        Point o = corner(c);
        Rational off = u - q(1, 8);
        std::vector<Point> pts{o + Point(u, q(1, 4)), o + Point(Rational(u + q(3, 8)), q(5, 8))};
        for (long r = 1; o.y + r <= 3; ++r) {
            pts.push_back(o + Point(Rational(q(1, 2) + off), Rational(r + q(1, 8))));
            pts.push_back(o + Point(Rational(q(1, 4) + off), Rational(r + q(3, 8))));
            pts.push_back(o + Point(Rational(q(1, 2) + off), Rational(r + q(5, 8))));
        }
        return pts;
    };

    struct Route {
        std::vector<Point> up, down;  // from the first and from the second endpoint
        Rational height;
    };
    std::vector<Route> routes;
    std::vector<Rational> verticals;
    long index = 0;
    for (auto [a, b] : spec.pairs)
        for (int p = 0; p < spec.paths_per_pair; ++p, ++index) {
            Route r{climb(a, slot(a)), climb(b, slot(b)), q(5 + index)};
            verticals.push_back(r.up.back().x);
            verticals.push_back(r.down.back().x);
            routes.push_back(std::move(r));
        }

    std::vector<Point> pos;
    for (int t = 0; t < spec.tiles; ++t)
        for (int v = 0; v < 25; ++v) pos.push_back(corner(25 * t + v));
    index = 0;
    for (auto [a, b] : spec.pairs)
        for (int p = 0; p < spec.paths_per_pair; ++p, ++index) {
            const Route& r = routes[static_cast<std::size_t>(index)];
            const Rational xa = r.up.back().x, xb = r.down.back().x;
            std::vector<Point> inner = r.up;
            inner.emplace_back(xa, r.height);
            std::vector<Point> tail{Point(xb, r.height)};
            tail.insert(tail.end(), r.down.rbegin(), r.down.rend());
            long extra = spec.path_length - static_cast<long>(inner.size() + tail.size() + 1);
            if (extra < 0)
                throw InputError("tiles path length " + std::to_string(spec.path_length) + " is too short; pair " +
                                 std::to_string(a) + "-" + std::to_string(b) + " needs " +
                                 std::to_string(inner.size() + tail.size() + 1));
            // Extra path vertices go on the channel before the first vertical it passes.
            Rational dir = xb > xa ? q(1) : q(-1);
            Rational gap = abs_q(xb - xa);
            for (const auto& x : verticals) {
                Rational d = (x - xa) * dir;
                if (d > 0 && d < gap) gap = d;
            }
            for (long j = 1; j <= extra; ++j) inner.emplace_back(Rational(xa + dir * gap * q(j, extra + 1)), r.height);
            inner.insert(inner.end(), tail.begin(), tail.end());
            pos.insert(pos.end(), inner.begin(), inner.end());
        }
    if (static_cast<int>(pos.size()) != g.n()) throw InputError("tiles drawing out of sync with the tiles graph");
    return straight_line(g, std::move(pos));
}

}  // namespace bp
