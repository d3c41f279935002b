#include "beyondplanar/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "beyondplanar/errors.hpp"

namespace bp::red {

Instance validate_instance(const std::vector<long>& A, long B) {
    if (A.empty() || A.size() % 3 != 0)
        throw InputError("instance size " + std::to_string(A.size()) + " is not a positive multiple of 3");
    if (B < 1) throw InputError("B must be positive");
    Instance inst{A, B, static_cast<int>(A.size() / 3)};
    for (long a : A) {
        // B/4 < a < B/2, compared exactly.
        if (!(4 * a > B)) throw InputError("a=" + std::to_string(a) + " violates B/4 < a");
        if (!(2 * a < B)) throw InputError("a=" + std::to_string(a) + " violates a < B/2");
    }
    long sum = std::accumulate(A.begin(), A.end(), 0L);
    if (sum != inst.m * B)
        throw InputError("sum " + std::to_string(sum) + " differs from m*B = " + std::to_string(inst.m * B));
    if (static_cast<long long>(inst.m) * B > 100000) throw InputError("instance too large: m*B exceeds 100000");
    return inst;
}

void validate_witness(const Instance& inst, const Witness& w) {
    if (w.triples.size() != static_cast<std::size_t>(inst.m))
        throw InputError("witness needs " + std::to_string(inst.m) + " triples");
    std::set<int> used;
    for (const auto& t : w.triples) {
        long sum = 0;
        for (int i : t) {
            if (i < 0 || i >= static_cast<int>(inst.A.size()))
                throw InputError("witness index " + std::to_string(i) + " out of range");
            if (!used.insert(i).second) throw InputError("witness uses index " + std::to_string(i) + " twice");
            sum += inst.A[i];
        }
        if (sum != inst.B)
            throw InputError("triple sums to " + std::to_string(sum) + " instead of " + std::to_string(inst.B));
    }
}

Gadget build_gadget_graph(const Instance& inst) {
    const int m = inst.m;
    const int nt = 3 * m;
    const int nc = static_cast<int>(inst.B) * m;
    Gadget g;
    int next = 2;
    std::vector<std::string> role{"transmitter-center", "collector-center"};
    auto take = [&](int count, const std::string& r) {
        std::vector<Vertex> out;
        for (int i = 0; i < count; ++i) {
            out.push_back(next++);
            role.push_back(r);
        }
        return out;
    };
    g.t_outer = take(nt, "transmitter-outer");
    g.t_inner = take(nt, "transmitter-inner");
    g.c_outer = take(nc, "collector-outer");
    g.c_inner = take(nc, "collector-inner");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<Edge, std::string> labels;
    auto add = [&](Vertex a, Vertex b, const std::string& label) {
        edges.emplace_back(a, b);
        labels[canonical(a, b)] = label;
    };
    auto wheel = [&](const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
        const std::size_t k = outer.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = (i + 1) % k;
            add(outer[i], outer[j], "circuit");
            add(inner[i], inner[j], "circuit");
            add(outer[i], inner[j], "diagonal");
        }
    };
    wheel(g.t_outer, g.t_inner);
    wheel(g.c_outer, g.c_inner);

    for (long a : inst.A) {
        Splitter s;
        s.value = a;
        s.center = take(1, "splitter-center")[0];
        s.satellites = take(static_cast<int>(a) + 1, "satellite");
        s.connectors = take(static_cast<int>(a) + 1, "connector");
        for (std::size_t i = 0; i < s.satellites.size(); ++i) {
            add(s.satellites[i], s.connectors[i], "splitter");
            add(s.connectors[i], s.center, "splitter");
            add(s.satellites[i], i == 0 ? g.transmitter_center : g.collector_center, "splitter");
        }
        g.splitters.push_back(std::move(s));
    }

    auto fat = [&](Vertex u, Vertex v, const std::string& kind) {
        FatEdge f{u, v, {}, kind};
        auto aux = take(3, "fat-edge-auxiliary");
        std::copy(aux.begin(), aux.end(), f.aux.begin());
        std::vector<Vertex> all{u, v, aux[0], aux[1], aux[2]};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) add(all[i], all[j], "fat");
        g.fat_edges.push_back(f);
    };
    for (int i = 0; i < nt; ++i) fat(g.transmitter_center, g.t_inner[i], "spoke");
    for (int i = 0; i < nt; ++i) fat(g.t_inner[i], g.t_outer[i], "radial");
    for (int i = 0; i < nc; ++i) fat(g.collector_center, g.c_inner[i], "spoke");
    for (int i = 0; i < nc; ++i) fat(g.c_inner[i], g.c_outer[i], "radial");
    for (int i = 1; i <= m; ++i) {
        g.meridians.push_back(g.fat_edges.size());
        fat(g.t_outer[3 * i - 1], g.c_outer[static_cast<std::size_t>(inst.B * i - 1)], "meridian");
    }

    std::string family = "gadget B " + std::to_string(inst.B) + " A";
    for (long a : inst.A) family += " " + std::to_string(a);
    g.graph = Graph(next, std::move(edges)).with_labels(std::move(labels)).with_family(family);
    g.role = std::move(role);
    return g;
}

namespace {

Rational q(long num, long den = 1) { return ratio(num, den); }

Point mid(const Point& a, const Point& b) { return lerp(a, b, q(1, 2)); }

// Fat edges are drawn inside a thin triangle to the left of u->v with one
// crossing, between edge (u, aux[2]) and edge (aux[1], aux[0]).
void place_fat(const FatEdge& f, std::vector<Point>& pos, const Rational& h) {
    Point d = pos[f.v] - pos[f.u];
    Point n = h * rot_ccw(d);
    auto at = [&](const Rational& x, const Rational& y) { return pos[f.u] + x * d + y * n; };
    pos[f.aux[0]] = at(q(1, 2), q(1));
    pos[f.aux[1]] = at(q(2, 5), q(1, 3));
    pos[f.aux[2]] = at(q(3, 5), q(11, 20));
}

}  // namespace

Drawing build_witness_drawing(const Instance& inst, const Witness& w) {
    validate_witness(inst, w);
    Gadget gd = build_gadget_graph(inst);
    const Graph& g = gd.graph;
    const long m = inst.m;
    const long B = inst.B;
    const long nt = 3 * m, nc = B * m;
    const long W = 8, H = 2;
    const Rational xc = q(4 * m);
    const Rational K = q(m * W);
    const Rational h = q(1, 64 * nc);
    const Rational eps = q(1, 16 * nc);

    std::vector<Point> pos(static_cast<std::size_t>(g.n()));
    std::vector<std::vector<Point>> bends(g.m());

    // Both wheels are convex "bowls": rim vertices on a parabola facing the
    // strip between them, closed by a chord on the far side.
    auto t_x = [&](long j) -> Rational {
        return j <= nt - 3 ? q(j * W, 3) : q((m - 1) * W) + q((j - (nt - 3)) * W, 2);
    };
    auto c_x = [&](long j) -> Rational {
        return j <= B * (m - 1) ? q(j * W, B) : q((m - 1) * W) + q((j - B * (m - 1)) * W, B - 1);
    };
    auto bowl = [&](const Rational& x) -> Rational { return q(H) + (x - xc) * (x - xc) / K; };
    // Index j in 0..k-1 with j = 0 standing for the last circuit vertex.
    auto at = [](const std::vector<Vertex>& c, long j) {
        long k = static_cast<long>(c.size());
        return c[static_cast<std::size_t>((j + k - 1) % k)];
    };

    Point ct(xc, q(H + m));
    Point cc(xc, q(-H - m));
    pos[gd.transmitter_center] = ct;
    pos[gd.collector_center] = cc;
    for (long j = 0; j < nt; ++j) {
        Point p(t_x(j), bowl(t_x(j)));
        pos[at(gd.t_outer, j)] = p;
        pos[at(gd.t_inner, j)] = lerp(ct, p, q(1, 2));
    }
    for (long j = 0; j < nc; ++j) {
        Point p(c_x(j), Rational(-bowl(c_x(j))));
        pos[at(gd.c_outer, j)] = p;
        pos[at(gd.c_inner, j)] = lerp(cc, p, q(1, 2));
    }
    for (const auto& f : gd.fat_edges) place_fat(f, pos, h);

    auto route = [&](Vertex a, Vertex b, std::vector<Point> pts) {
        EdgeId e = g.edge_id(a, b);
        if (a > b) std::reverse(pts.begin(), pts.end());
        bends[e] = std::move(pts);
    };

    const Rational y_top = q(H + 2 * m);
    // Places one satellite of a splitter in a sector; returns the point on the
    // line y = +-1 through which the connector edge reaches the splitter center.
    struct Slot {
        Vertex sat, con;
        std::vector<Point> path;  // connector -> center, without endpoints
    };
    auto sector = [&](bool transmitter, long j, Vertex sat, Vertex con) {
        const auto& outer = transmitter ? gd.t_outer : gd.c_outer;
        const auto& inner = transmitter ? gd.t_inner : gd.c_inner;
        long k = transmitter ? nt : nc;
        Point mo = mid(pos[at(outer, j)], pos[at(outer, j + 1)]);
        Point mi = mid(pos[at(inner, j)], pos[at(inner, j + 1)]);
        pos[sat] = lerp(mi, mo, eps);
        pos[con] = lerp(mi, mo, 1 - eps);
        Rational sign = transmitter ? q(1) : q(-1);
        Slot s{sat, con, {}};
        if (j < k - 1) {
            s.path.push_back(Point(mo.x, sign));
        } else {
            Rational far = transmitter ? Rational(y_top + 1) : Rational(-y_top - 1);
            Rational side = q(m * W + (transmitter ? 1 : 2));
            s.path = {Point(mo.x, far), Point(side, far), Point(side, sign)};
        }
        return s;
    };

    for (long i = 0; i < m; ++i) {
        long c_next = B * i;
        for (int k = 0; k < 3; ++k) {
            const Splitter& sp = gd.splitters[static_cast<std::size_t>(w.triples[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])];
            std::vector<Slot> slots;
            slots.push_back(sector(true, 3 * i + k, sp.satellites[0], sp.connectors[0]));
            for (long r = 1; r <= sp.value; ++r)
                slots.push_back(sector(false, c_next++, sp.satellites[r], sp.connectors[r]));
            Rational cx_sum = 0;
            for (std::size_t r = 1; r < slots.size(); ++r) cx_sum += slots[r].path.back().x;
            Rational x = (slots[0].path.back().x + cx_sum / static_cast<long>(slots.size() - 1)) / 2;
            pos[sp.center] = Point(x, q(0));
            for (const auto& s : slots) route(s.con, sp.center, s.path);
        }
    }
    return Drawing{g, std::move(pos), std::move(bends)};
}

}  // namespace bp::red
