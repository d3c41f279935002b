#include "beyondplanar/operations.hpp"

#include <algorithm>
#include <numeric>

#include "beyondplanar/errors.hpp"

namespace bp {

namespace {

std::vector<Origin> identity_vertices(int n) {
    std::vector<Origin> map;
    map.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) map.push_back({Origin::Kind::vertex, v});
    return map;
}

std::vector<std::vector<Vertex>> cyclic_orders(const Graph& g) {
    if (g.rotation()) return *g.rotation();
    return g.adjacency();
}

}  // namespace

Traced<Graph> subdivide(const Graph& g, const std::vector<int>& counts) {
    if (counts.size() != g.m()) throw InputError("subdivision counts must cover every edge");
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Edge, Origin>> origins;
    OpTrace trace{g, OpKind::subdivision, identity_vertices(g.n()), {}};
    Vertex next = g.n();
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (counts[e] < 0) throw InputError("negative subdivision count");
        Vertex prev = g.edge(e).u;
        for (int i = 0; i < counts[e]; ++i) {
            edges.emplace_back(prev, next);
            origins.push_back({canonical(prev, next), {Origin::Kind::edge, static_cast<int>(e)}});
            trace.vertex_map.push_back({Origin::Kind::edge, static_cast<int>(e)});
            prev = next++;
        }
        edges.emplace_back(prev, g.edge(e).v);
        origins.push_back({canonical(prev, g.edge(e).v), {Origin::Kind::edge, static_cast<int>(e)}});
    }
    Graph out(next, std::move(edges));
    trace.edge_map.resize(out.m());
    for (const auto& [edge, origin] : origins) trace.edge_map[out.edge_id(edge.u, edge.v)] = origin;
    int total = std::accumulate(counts.begin(), counts.end(), 0);
    bool uniform = !counts.empty() && std::all_of(counts.begin(), counts.end(), [&](int c) { return c == counts[0]; });
    std::string tag = uniform ? "subdivide(" + std::to_string(counts[0]) + ")" : "subdivide(" + std::to_string(total) + " total)";
    out = out.with_family(g.family().empty() ? tag : tag + " of " + g.family());
    return {std::move(out), std::move(trace)};
}

Traced<Graph> subdivide(const Graph& g, int uniform) {
    return subdivide(g, std::vector<int>(g.m(), uniform));
}

std::vector<Vertex> subdivision_chain(const Graph& origin, const std::vector<int>& counts, EdgeId e) {
    Vertex base = origin.n();
    for (EdgeId f = 0; f < e; ++f) base += counts[f];
    std::vector<Vertex> chain(static_cast<std::size_t>(counts[e]));
    std::iota(chain.begin(), chain.end(), base);
    return chain;
}

Traced<Graph> node_to_circle(const Graph& g) {
    auto deg = g.degrees();
    for (Vertex v = 0; v < g.n(); ++v) {
        if (deg[v] < 3)
            throw InputError("node-to-circle expansion needs minimum degree 3; vertex " + std::to_string(v) +
                             " has degree " + std::to_string(deg[v]));
    }
    auto orders = cyclic_orders(g);
    std::vector<Vertex> offset(static_cast<std::size_t>(g.n()) + 1, 0);
    for (Vertex v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + deg[v];
    const Vertex total = offset[g.n()];

    auto position = [&](Vertex v, Vertex w) {
        const auto& ord = orders[v];
        return static_cast<int>(std::find(ord.begin(), ord.end(), w) - ord.begin());
    };

    OpTrace trace{g, OpKind::node_to_circle, {}, {}};
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<Edge, std::string> labels;
    std::vector<std::pair<Edge, Origin>> origins;
    Rotation rot(static_cast<std::size_t>(total));
    for (Vertex v = 0; v < g.n(); ++v) {
        for (int i = 0; i < deg[v]; ++i) {
            Vertex c = offset[v] + i;
            Vertex nxt = offset[v] + (i + 1) % deg[v];
            Vertex prv = offset[v] + (i + deg[v] - 1) % deg[v];
            Vertex w = orders[v][i];
            Vertex partner = offset[w] + position(w, v);
            trace.vertex_map.push_back({Origin::Kind::vertex, v});
            rot[c] = {prv, nxt, partner};
            edges.emplace_back(c, nxt);
            labels[canonical(c, nxt)] = "inner";
            origins.push_back({canonical(c, nxt), {Origin::Kind::vertex, v}});
            if (v < w) {
                edges.emplace_back(c, partner);
                labels[canonical(c, partner)] = "binding";
                origins.push_back({canonical(c, partner), {Origin::Kind::edge, static_cast<int>(g.edge_id(v, w))}});
            }
        }
    }
    Graph out(total, std::move(edges));
    trace.edge_map.resize(out.m());
    for (const auto& [edge, origin] : origins) trace.edge_map[out.edge_id(edge.u, edge.v)] = origin;
    out = out.with_labels(std::move(labels))
              .with_rotation(std::move(rot))
              .with_family(g.family().empty() ? "n2c" : "n2c of " + g.family());
    return {std::move(out), std::move(trace)};
}

Vertex circle_vertex(const Graph& origin, Vertex v, Vertex w) {
    auto orders = cyclic_orders(origin);
    auto deg = origin.degrees();
    Vertex base = 0;
    for (Vertex x = 0; x < v; ++x) base += deg[x];
    const auto& ord = orders[v];
    auto it = std::find(ord.begin(), ord.end(), w);
    if (it == ord.end()) throw InputError("no edge (" + std::to_string(v) + "," + std::to_string(w) + ")");
    return base + static_cast<Vertex>(it - ord.begin());
}

Traced<Graph> add_path(const Graph& g, Vertex u, Vertex v, int length) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw InputError("path endpoint out of range");
    if (u == v) throw InputError("path endpoints must differ");
    if (length < 1) throw InputError("path length must be at least 1");
    if (length == 1 && g.has_edge(u, v)) throw InputError("duplicate edge: (" + std::to_string(u) + "," +
                                                          std::to_string(v) + ") already present");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    OpTrace trace{g, OpKind::path_addition, identity_vertices(g.n()), {}};
    Vertex prev = u;
    Vertex next = g.n();
    for (int i = 1; i < length; ++i) {
        edges.emplace_back(prev, next);
        trace.vertex_map.push_back({Origin::Kind::path, -1});
        prev = next++;
    }
    edges.emplace_back(prev, v);
    Graph out(next, std::move(edges));
    out = out.with_labels(g.labels());
    trace.edge_map.resize(out.m());
    for (EdgeId e = 0; e < out.m(); ++e) {
        auto old = g.find_edge(out.edge(e).u, out.edge(e).v);
        bool is_new = out.edge(e).v >= g.n() || !old || (length == 1 && canonical(u, v) == out.edge(e));
        trace.edge_map[e] = is_new ? Origin{Origin::Kind::path, -1} : Origin{Origin::Kind::edge, static_cast<int>(*old)};
    }
    out = out.with_family(g.family().empty() ? "addpath" : "addpath of " + g.family());
    return {std::move(out), std::move(trace)};
}

Graph contract_subdivision(const Graph& subdivided, const OpTrace& trace) {
    if (trace.kind != OpKind::subdivision) throw InputError("trace is not a subdivision");
    const Graph& g = trace.origin;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto adj = subdivided.adjacency();
    // Walk each original endpoint through degree-2 subdivision vertices.
    for (Vertex s = 0; s < g.n(); ++s) {
        for (Vertex first : adj[s]) {
            Vertex prev = s;
            Vertex cur = first;
            while (cur >= g.n()) {
                if (adj[cur].size() != 2) throw InputError("subdivision vertex without degree 2");
                Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            if (s < cur) edges.emplace_back(s, cur);
        }
    }
    return Graph(g.n(), std::move(edges));
}

}  // namespace bp
