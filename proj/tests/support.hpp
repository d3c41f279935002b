#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "beyondplanar/drawing.hpp"
#include "beyondplanar/generators.hpp"
#include "beyondplanar/graph.hpp"

namespace bp::fixtures {

// K5 on vertices 0..4 standing for 1..5.
inline CrossingStructure k5_fixture_a() {
    Graph g = gen::complete(5);
    return make_crossing_structure(g, {Crossing{g.edge_id(0, 2), g.edge_id(1, 3), Rational(1, 2), Rational(1, 2), {}}});
}

// Edge 45 crossed by 12, 23 and 13 in that order.
inline CrossingStructure k5_fixture_e() {
    Graph g = gen::complete(5);
    EdgeId e45 = g.edge_id(3, 4);
    std::vector<Crossing> cs;
    cs.push_back({g.edge_id(0, 1), e45, Rational(1, 2), Rational(1, 4), {}});
    cs.push_back({g.edge_id(1, 2), e45, Rational(1, 2), Rational(1, 2), {}});
    cs.push_back({g.edge_id(0, 2), e45, Rational(1, 2), Rational(3, 4), {}});
    return make_crossing_structure(g, cs);
}

// Random simple crossing structure: distinct non-adjacent pairs, at most
// `cap` crossings per edge, distinct positions along every edge.
inline CrossingStructure random_structure(std::mt19937_64& rng, int n, int percent, int max_crossings, int cap) {
    Graph g = gen::random(n, percent, rng());
    std::vector<int> load(g.m(), 0);
    std::vector<std::set<int>> used(g.m());
    std::set<std::pair<EdgeId, EdgeId>> pairs;
    std::vector<Crossing> out;
    auto slot = [&](EdgeId e) {
        int t;
        do t = 1 + static_cast<int>(rng() % 999);
        while (!used[e].insert(t).second);
        return ratio(t, 1000);
    };
    if (g.m() < 2) return make_crossing_structure(g, {});
    for (int tries = 0; tries < 40 * max_crossings && static_cast<int>(out.size()) < max_crossings; ++tries) {
        EdgeId a = static_cast<EdgeId>(rng() % g.m());
        EdgeId b = static_cast<EdgeId>(rng() % g.m());
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        if (ea.has(eb.u) || ea.has(eb.v)) continue;
        if (load[a] >= cap || load[b] >= cap || pairs.count({a, b})) continue;
        pairs.insert({a, b});
        ++load[a];
        ++load[b];
        out.push_back({a, b, slot(a), slot(b), {}});
    }
    return make_crossing_structure(g, out);
}

// Rejection-sampled random graph with minimum degree at least 3.
inline Graph random_min_degree3(std::mt19937_64& rng, int n) {
    for (;;) {
        Graph g = gen::random(n, 50 + static_cast<int>(rng() % 40), rng());
        if (g.min_degree() >= 3) return g;
    }
}

inline long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace bp::fixtures
