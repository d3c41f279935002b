#include "beyondplanar/checkers.hpp"

#include <algorithm>
#include <functional>

#include "beyondplanar/errors.hpp"

namespace bp {

namespace {

void require_simple(const CrossingStructure& cs) {
    Verdict s = validate_simple(cs);
    if (!s.holds) {
        std::string names;
        for (EdgeId e : s.edges)
            names += " (" + std::to_string(cs.graph.edge(e).u) + "," + std::to_string(cs.graph.edge(e).v) + ")";
        throw InputError("crossing structure is not simple: " + s.reason + names);
    }
}

std::vector<std::vector<EdgeId>> sorted_crossers(const CrossingStructure& cs) {
    auto lists = cs.crossers();
    for (auto& l : lists) std::sort(l.begin(), l.end());
    return lists;
}

}  // namespace

std::vector<std::vector<EdgeId>> crossing_graph(const CrossingStructure& cs) { return sorted_crossers(cs); }

Verdict check_k_planar(const CrossingStructure& cs, int k) {
    require_simple(cs);
    if (k < 0) throw InputError("k must be non-negative");
    Verdict v = verdict_for("kplanar", k);
    auto lists = cs.crossers();
    for (EdgeId e = 0; e < lists.size(); ++e) {
        if (lists[e].size() <= static_cast<std::size_t>(k)) continue;
        v.holds = false;
        v.reason = "edge crossed " + std::to_string(lists[e].size()) + " times";
        v.edges = {e};
        v.edges.insert(v.edges.end(), lists[e].begin(), lists[e].end());
        return v;
    }
    return v;
}

Verdict check_fcf(const CrossingStructure& cs) {
    require_simple(cs);
    Verdict v = verdict_for("fcf");
    const Graph& g = cs.graph;
    auto lists = cs.crossers();
    for (EdgeId e = 0; e < lists.size(); ++e) {
        const auto& l = lists[e];
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                if (!g.edge(l[i]).shares_vertex(g.edge(l[j]))) continue;
                v.holds = false;
                v.reason = "two edges crossing the same edge share a vertex";
                v.edges = {e, l[i], l[j]};
                return v;
            }
    }
    return v;
}

Verdict check_fan(const CrossingStructure& cs) {
    require_simple(cs);
    Verdict v = verdict_for("fan");
    const Graph& g = cs.graph;
    auto lists = sorted_crossers(cs);
    for (EdgeId e = 0; e < lists.size(); ++e) {
        const auto& l = lists[e];
        if (l.size() < 2) continue;
        std::vector<Vertex> common{g.edge(l[0]).u, g.edge(l[0]).v};
        for (std::size_t i = 1; i < l.size() && !common.empty(); ++i)
            std::erase_if(common, [&](Vertex w) { return !g.edge(l[i]).has(w); });
        if (!common.empty()) continue;
        v.holds = false;
        v.reason = "edges crossing the same edge have no common vertex";
        v.edges = {e};
        v.edges.insert(v.edges.end(), l.begin(), l.end());
        return v;
    }
    return v;
}

Verdict check_quasi(const CrossingStructure& cs, int k, std::uint64_t node_budget) {
    require_simple(cs);
    if (k < 3) throw InputError("quasi-planarity needs k >= 3");
    Verdict v = verdict_for("quasi", k);
    auto adj = sorted_crossers(cs);
    // Only neighbors with larger index, so every clique is found once in increasing order.
    std::vector<std::vector<EdgeId>> up(adj.size());
    for (EdgeId e = 0; e < adj.size(); ++e)
        for (EdgeId f : adj[e])
            if (f > e) up[e].push_back(f);

    std::uint64_t nodes = 0;
    std::vector<EdgeId> clique;
    std::function<bool(const std::vector<EdgeId>&)> extend = [&](const std::vector<EdgeId>& cand) {
        if (clique.size() == static_cast<std::size_t>(k)) return true;
        if (clique.size() + cand.size() < static_cast<std::size_t>(k)) return false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (++nodes > node_budget)
                throw ResourceBoundError("quasi-planarity search exceeded " + std::to_string(node_budget) + " nodes");
            EdgeId x = cand[i];
            if (clique.size() + (cand.size() - i) < static_cast<std::size_t>(k)) return false;
            std::vector<EdgeId> next;
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), up[x].begin(),
                                  up[x].end(), std::back_inserter(next));
            clique.push_back(x);
            if (extend(next)) return true;
            clique.pop_back();
        }
        return false;
    };
    for (EdgeId e = 0; e < adj.size(); ++e) {
        if (up[e].size() + 1 < static_cast<std::size_t>(k)) continue;
        clique = {e};
        if (++nodes > node_budget)
            throw ResourceBoundError("quasi-planarity search exceeded " + std::to_string(node_budget) + " nodes");
        if (extend(up[e])) {
            v.holds = false;
            v.reason = std::to_string(k) + " edges cross pairwise";
            v.edges = clique;
            return v;
        }
    }
    return v;
}

Verdict check_k_gap(const CrossingStructure& cs, int k) {
    require_simple(cs);
    if (k < 0) throw InputError("k must be non-negative");
    Verdict v = verdict_for("gap", k);
    const std::size_t m = cs.graph.m();
    const auto& xs = cs.crossings;
    // Augmenting paths in the bipartite crossing/edge network: a crossing is
    // moved to its other edge to free a slot.
    std::vector<std::vector<std::size_t>> owned(m);
    std::vector<EdgeId> owner(xs.size(), m);
    std::vector<int> seen(m, -1);

    std::function<bool(EdgeId, int)> free_slot = [&](EdgeId e, int stamp) -> bool {
        if (seen[e] == stamp) return false;
        seen[e] = stamp;
        if (owned[e].size() < static_cast<std::size_t>(k)) return true;
        for (std::size_t pos = 0; pos < owned[e].size(); ++pos) {
            std::size_t c = owned[e][pos];
            EdgeId alt = xs[c].a == e ? xs[c].b : xs[c].a;
            if (!free_slot(alt, stamp)) continue;
            owned[e].erase(owned[e].begin() + static_cast<std::ptrdiff_t>(pos));
            owned[alt].push_back(c);
            owner[c] = alt;
            return true;
        }
        return false;
    };

    for (std::size_t c = 0; c < xs.size(); ++c) {
        int stamp = static_cast<int>(c);
        for (EdgeId e : {xs[c].a, xs[c].b}) {
            if (!free_slot(e, stamp)) continue;
            owned[e].push_back(c);
            owner[c] = e;
            break;
        }
        if (owner[c] != m) continue;
        // Every edge reached by the failed search is saturated and all
        // crossings owned by them stay inside the reached set.
        std::vector<EdgeId> reached;
        for (EdgeId e = 0; e < m; ++e)
            if (seen[e] == stamp) reached.push_back(e);
        std::size_t inside = 0;
        for (const auto& x : xs)
            if (seen[x.a] == stamp && seen[x.b] == stamp) ++inside;
        v.holds = false;
        v.reason = std::to_string(inside) + " crossings among " + std::to_string(reached.size()) +
                   " edges exceed capacity " + std::to_string(static_cast<std::size_t>(k) * reached.size());
        v.edges = std::move(reached);
        return v;
    }
    v.assignment = GapAssignment{k, std::move(owner)};
    return v;
}

bool verify_assignment(const CrossingStructure& cs, const GapAssignment& assignment) {
    if (assignment.owner.size() != cs.crossings.size()) return false;
    std::vector<int> load(cs.graph.m(), 0);
    for (std::size_t c = 0; c < cs.crossings.size(); ++c) {
        EdgeId e = assignment.owner[c];
        if (e != cs.crossings[c].a && e != cs.crossings[c].b) return false;
        if (++load[e] > assignment.k) return false;
    }
    return true;
}

Verdict check_rac(const Drawing& d, int max_bends) {
    if (max_bends < 0) throw InputError("bend budget must be non-negative");
    CrossingStructure cs = extract_crossings(d);
    Verdict v = verdict_for("rac", max_bends);
    for (EdgeId e = 0; e < d.graph.m(); ++e) {
        if (d.bend_count(e) <= static_cast<std::size_t>(max_bends)) continue;
        v.holds = false;
        v.reason = "edge has " + std::to_string(d.bend_count(e)) + " bends";
        v.edges = {e};
        return v;
    }
    auto direction = [&](EdgeId e, const Rational& t) {
        auto pts = d.polyline(e);
        Rational scaled = t * static_cast<long>(pts.size() - 1);
        mpz_class idx = scaled.get_num() / scaled.get_den();
        std::size_t i = idx.get_ui();
        return pts[i + 1] - pts[i];
    };
    for (const auto& c : cs.crossings) {
        Point da = direction(c.a, c.ta);
        Point db = direction(c.b, c.tb);
        if (dot(da, db) == 0) continue;
        v.holds = false;
        v.reason = "crossing is not at a right angle";
        v.edges = {c.a, c.b};
        v.at = c.at;
        v.dir_a = da;
        v.dir_b = db;
        return v;
    }
    return v;
}

}  // namespace bp
