#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "beyondplanar/certificates.hpp"
#include "beyondplanar/checkers.hpp"
#include "beyondplanar/constructions.hpp"
#include "beyondplanar/errors.hpp"
#include "beyondplanar/generators.hpp"
#include "beyondplanar/io.hpp"
#include "beyondplanar/operations.hpp"
#include "beyondplanar/oracle.hpp"
#include "beyondplanar/reduction.hpp"
#include "support.hpp"

using namespace bp;
using bp::fixtures::binomial;

namespace {

// Every artifact produced by criteria 1-10, serialized once.
std::vector<std::string> artifacts;

template <typename T>
void keep(const T& value) {
    artifacts.push_back(io::write(value));
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

void expect(Outcome& o, bool ok, const std::string& what) {
    if (!ok && o.pass) {
        o.pass = false;
        o.detail = what;
    }
}

Outcome k5_fixtures() {
    Outcome o;
    auto a = fixtures::k5_fixture_a();
    auto e = fixtures::k5_fixture_e();
    keep(a);
    keep(e);
    expect(o, check_fcf(a).holds, "(a) not FCF");
    expect(o, check_k_planar(a, 1).holds, "(a) not 1-planar");
    auto gap = check_k_gap(e, 1);
    keep(gap);
    expect(o, gap.holds, "(e) not 1-gap");
    expect(o, check_quasi(e, 3).holds, "(e) not quasi-planar");
    expect(o, !check_fan(e).holds, "(e) fan-crossing");
    expect(o, !check_k_planar(e, 2).holds, "(e) 2-planar");
    expect(o, !check_fcf(e).holds, "(e) FCF");
    o.detail = o.pass ? "(a) FCF, 1-planar; (e) 1-gap, quasi, not fan, not 2-planar, not FCF" : o.detail;
    return o;
}

Outcome universality() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::vector<Graph> graphs;
    for (int i = 0; i < 100; ++i) graphs.push_back(fixtures::random_min_degree3(rng, 5 + i % 8));
    graphs.push_back(gen::complete(7));
    graphs.push_back(gen::complete(10));
    graphs.push_back(gen::complete(12));
    graphs.push_back(gen::hypercube(4));
    int runs = 0;
    for (const Graph& g : graphs) {
        std::string name = g.family();
        auto fcf_ok = [&](const Drawing& d, const std::string& what) {
            expect(o, check_fcf(extract_crossings(d)).holds, what + " not FCF on " + name);
        };
        auto quasi_ok = [&](const Drawing& d, const std::string& what) {
            expect(o, check_quasi(extract_crossings(d), 3).holds, what + " not quasi-planar on " + name);
        };
        fcf_ok(fcf_2subdivision(g), "fcf2subdiv");
        fcf_ok(convex_n2c_fcf(g), "convexn2c");
        quasi_ok(quasi_1subdivision(g), "quasi1subdiv");
        quasi_ok(boxvis_n2c_quasi(g), "boxvisn2c");
        expect(o, check_rac(rac_3bend(g), 3).holds, "rac3 not RAC on " + name);
        runs += 5;
    }
    Drawing sample = fcf_2subdivision(gen::complete(7));
    keep(sample);
    keep(sample.graph);
    keep(extract_crossings(sample));
    keep(rac_3bend(gen::hypercube(4)));
    if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(runs) + " constructions";
    return o;
}

Outcome crossing_counts() {
    Outcome o;
    for (int n = 5; n <= 12; ++n) {
        Graph g = gen::complete(n);
        Drawing d = convex_drawing(g);
        auto cs = extract_crossings(d);
        long want = binomial(n, 4);
        expect(o, static_cast<long>(cs.crossings.size()) == want, "K" + std::to_string(n) + " convex count");
        Drawing t = n2c_transform(d);
        expect(o, extract_crossings(t).crossings.size() == cs.crossings.size(),
               "n2c_transform changed the count of K" + std::to_string(n));
        if (n == 6) {
            keep(d);
            keep(t);
        }
    }
    if (o.pass) o.detail = "C(n,4) for n = 5..12 (495 at 12), n2c_transform preserves";
    return o;
}

Outcome gap_vs_oracle() {
    Outcome o;
    std::mt19937_64 rng(7);
    int held = 0;
    for (int i = 0; i < 1000; ++i) {
        auto cs = fixtures::random_structure(rng, 5 + static_cast<int>(rng() % 6), 60, 1 + static_cast<int>(rng() % 12), 12);
        int k = static_cast<int>(rng() % 3);
        auto fast = check_k_gap(cs, k);
        auto slow = oracle::brute_gap(cs, k);
        held += fast.holds;
        expect(o, fast.holds == slow.holds, "disagreement at structure " + std::to_string(i));
        if (fast.holds) expect(o, verify_assignment(cs, *fast.assignment), "bad assignment");
        if (i < 3) {
            keep(cs);
            keep(fast);
        }
    }
    if (o.pass) o.detail = "1000 structures agree (" + std::to_string(held) + " hold)";
    return o;
}

Outcome two_k_planar_gap() {
    Outcome o;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        int k = 1 + static_cast<int>(rng() % 3);
        auto cs = fixtures::random_structure(rng, 6 + static_cast<int>(rng() % 7), 70, 30, 2 * k);
        expect(o, check_k_planar(cs, 2 * k).holds, "generator exceeded the cap");
        expect(o, check_k_gap(cs, k).holds, "2k-planar structure not k-gap at " + std::to_string(i));
    }
    if (o.pass) o.detail = "500 structures";
    return o;
}

Outcome certificates() {
    Outcome o;
    auto ccc = cert::exclude(cert::ccc_subject(11), cert::ccc_bound(11), 3);
    keep(ccc);
    expect(o, ccc.bound.value == Rational(536576, 5), "ccc lb");
    expect(o, ccc.subject.m == 33792, "ccc m");
    expect(o, ccc.ratio > Rational(31, 10), "ccc ratio");
    std::set<std::string> got;
    for (const auto& c : ccc.conclusions) got.insert(c.excluded);
    expect(o, got.count("3-gap-planar") && got.count("6-planar") && got.count("fan-crossing"), "ccc conclusions");
    expect(o, ccc.status == "conclusive" && cert::audit(ccc), "ccc audit");

    auto kn = cert::exclude(cert::subdivided_complete(19, 3), cert::kn_bound(19), 1);
    keep(kn);
    got.clear();
    for (const auto& c : kn.conclusions) got.insert(c.excluded);
    expect(o, kn.subject.m == 684, "sigma3(K19) m");
    expect(o, got.count("1-gap-planar") && got.count("2-planar"), "kn 19 conclusions");
    expect(o, cert::harary_hill(12).value == 150 && cert::harary_hill(10).value == 60, "Harary-Hill values");

    auto k12 = cert::exclude(cert::subdivided_complete(12, 2), cert::kn_bound(12), 1);
    keep(k12);
    expect(o, k12.status == "inconclusive", "sigma2(K12) should be inconclusive");
    if (o.pass) o.detail = "ccc 11 ratio " + to_string(ccc.ratio) + "; kn 19 excludes 1-gap, 2-planar; sigma2(K12) inconclusive";
    return o;
}

Outcome family_sizes() {
    Outcome o;
    auto size = [&](const Graph& g, long n, long m, const std::string& what) {
        expect(o, g.n() == n && static_cast<long>(g.m()) == m, what);
    };
    size(gen::king(5, 5), 25, 72, "king 5 5");
    for (int k = 3; k <= 10; ++k) {
        std::string ks = std::to_string(k);
        size(gen::nested(k), 3 * k, 12 * k - 9, "nested " + ks);
        Graph x = gen::xw(k);
        size(x, 2 * k + 2, 8 * k, "xw " + ks);
        expect(o, static_cast<long>(x.m()) == 4 * x.n() - 8, "xw 4n-8");
        Graph h = gen::hermit(k);
        size(h, 6 * k - 1, 21 * k - 12, "hermit " + ks);
        expect(o, Rational(static_cast<long>(h.m())) == ratio(7 * h.n(), 2) - Rational(17, 2), "hermit 7n/2-17/2");
    }
    for (int d = 3; d <= 8; ++d) {
        Graph c = gen::ccc(d);
        size(c, d * (1L << d), 3L * d * (1L << (d - 1)), "ccc " + std::to_string(d));
        expect(o, c.min_degree() == 3 && c.max_degree() == 3, "ccc not 3-regular");
    }
    keep(gen::king(5, 5));
    keep(gen::hermit(3));
    if (o.pass) o.detail = "king, nested, xw, hermit (k = 3..10), ccc (d = 3..8)";
    return o;
}

Outcome drawing_fixtures() {
    Outcome o;
    Drawing nested = draw_nested(3);
    auto nc = extract_crossings(nested);
    expect(o, check_fcf(nc).holds, "nested 3 not FCF");
    expect(o, check_k_planar(nc, 1).holds, "nested 3 not 1-planar");
    Drawing hermit = draw_hermit(3);
    auto hv = check_fcf(extract_crossings(hermit));
    keep(hv);
    expect(o, hv.holds, "hermit 3 not FCF: " + hv.reason);
    Drawing xw = draw_xw(4);
    expect(o, check_k_planar(extract_crossings(xw), 1).holds, "xw 4 not 1-planar");
    Drawing tile = draw_tile();
    expect(o, check_rac(tile, 0).holds, "tile not RAC");
    keep(nested);
    keep(hermit);
    keep(xw);
    keep(tile);
    if (o.pass) o.detail = "nested 3, hermit 3, xw 4, tile";
    return o;
}

Outcome path_closure() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::vector<PathClass> classes{parse_path_class("fcf"), parse_path_class("quasi3"), parse_path_class("1-gap")};
    auto holds = [](const Drawing& d, const PathClass& c) {
        auto cs = extract_crossings(d);
        switch (c.kind) {
            case PathClass::Kind::fcf: return check_fcf(cs).holds;
            case PathClass::Kind::quasi3: return check_quasi(cs, 3).holds;
            case PathClass::Kind::kgap: return check_k_gap(cs, c.k).holds;
        }
        return false;
    };
    int done = 0;
    for (const auto& c : classes) {
        for (int i = 0; i < 50; ++i) {
            Drawing d;
            do {
                int n = 5 + static_cast<int>(rng() % 6);
                Graph g = gen::random(n, 30 + static_cast<int>(rng() % 50), rng());
                d = c.kind == PathClass::Kind::quasi3 ? quasi_1subdivision(g) : fcf_2subdivision(g);
            } while (!holds(d, c));
            Vertex u = static_cast<Vertex>(rng() % d.graph.n());
            Vertex v = static_cast<Vertex>(rng() % d.graph.n());
            if (u == v) v = (u + 1) % d.graph.n();
            try {
                Drawing r = route_path(d, u, v, c);
                expect(o, holds(r, c), to_string(c) + " lost at case " + std::to_string(i));
                if (i == 0) keep(r);
            } catch (const std::exception& e) {
                expect(o, false, to_string(c) + " case " + std::to_string(i) + ": " + e.what());
            }
            ++done;
        }
    }
    if (o.pass) o.detail = std::to_string(done) + " cases (fcf, quasi3, 1-gap)";
    return o;
}

Outcome reduction() {
    Outcome o;
    auto rejects = [](std::vector<long> A, long B) {
        try {
            red::validate_instance(A, B);
        } catch (const InputError&) {
            return true;
        }
        return false;
    };
    red::Instance inst = red::validate_instance({3, 3, 3}, 9);
    keep(inst);
    expect(o, inst.m == 1, "m");
    expect(o, rejects({2, 3, 4}, 9), "accepted a = 2 < B/4");
    expect(o, rejects({3, 3, 4}, 9), "accepted sum 10");

    red::Gadget gad = red::build_gadget_graph(inst);
    const Graph& g = gad.graph;
    keep(g);
    for (const auto& s : gad.splitters) {
        expect(o, static_cast<long>(s.satellites.size()) == s.value + 1, "satellite count");
        std::size_t len = shortest_path(g, gad.transmitter_center, s.center).size() - 1 +
                          shortest_path(g, s.center, gad.collector_center).size() - 1;
        expect(o, len == 6, "splitter path length");
        for (Vertex sat : s.satellites) expect(o, g.degrees()[sat] == 2, "satellite degree");
    }
    auto adj = g.adjacency();
    for (const auto& f : gad.fat_edges) {
        std::vector<Vertex> all{f.u, f.v, f.aux[0], f.aux[1], f.aux[2]};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) expect(o, g.has_edge(all[i], all[j]), "fat edge not a K5");
    }
    expect(o, static_cast<int>(gad.meridians.size()) == inst.m, "meridian count");
    for (std::size_t mi : gad.meridians) {
        const auto& mer = gad.fat_edges[mi];
        auto fat = [&](Vertex a, Vertex b) {
            for (const auto& f : gad.fat_edges)
                if ((f.u == a && f.v == b) || (f.u == b && f.v == a)) return true;
            return false;
        };
        Vertex tu = mer.u, cv = mer.v;
        std::size_t ti = std::find(gad.t_outer.begin(), gad.t_outer.end(), tu) - gad.t_outer.begin();
        std::size_t ci = std::find(gad.c_outer.begin(), gad.c_outer.end(), cv) - gad.c_outer.begin();
        bool chain = ti < gad.t_outer.size() && ci < gad.c_outer.size() &&
                     fat(gad.transmitter_center, gad.t_inner[ti]) && fat(gad.t_inner[ti], tu) &&
                     fat(cv, gad.c_inner[ci]) && fat(gad.c_inner[ci], gad.collector_center);
        expect(o, chain, "meridian is not a chain of 5 fat edges");
    }

    red::Witness w{{{0, 1, 2}}};
    keep(w);
    Drawing d = red::build_witness_drawing(inst, w);
    auto cs = extract_crossings(d);
    expect(o, check_fcf(cs).holds, "witness drawing not FCF");
    expect(o, check_k_planar(cs, 1).holds, "witness drawing not 1-planar");
    keep(d);
    if (o.pass) o.detail = "instance checks, gadget invariants, witness drawing FCF and 1-planar";
    return o;
}

std::string reserialize(const std::string& text) {
    std::string kind = io::kind_of(text);
    if (kind == "graph") return io::write(io::read_graph(text));
    if (kind == "drawing") return io::write(io::read_drawing(text));
    if (kind == "crossings") return io::write(io::read_crossings(text));
    if (kind == "verdict") return io::write(io::read_verdict(text));
    if (kind == "certificate") return io::write(io::read_certificate(text));
    if (kind == "instance") return io::write(io::read_instance(text));
    if (kind == "witness") return io::write(io::read_witness(text));
    throw InputError("unknown kind " + kind);
}

Outcome round_trips() {
    Outcome o;
    std::set<std::string> kinds;
    for (const auto& text : artifacts) {
        kinds.insert(io::kind_of(text));
        expect(o, reserialize(text) == text, "round trip differs for a " + io::kind_of(text));
    }
    expect(o, kinds.size() == 7, "not every format was exercised");
    if (o.pass) o.detail = std::to_string(artifacts.size()) + " artifacts, " + std::to_string(kinds.size()) + " formats";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"K5 fixtures", k5_fixtures},
        {"universality constructions", universality},
        {"crossing-count exactness", crossing_counts},
        {"gap-planarity vs oracle", gap_vs_oracle},
        {"2k-planar implies k-gap", two_k_planar_gap},
        {"certificates", certificates},
        {"family sizes", family_sizes},
        {"drawing fixtures", drawing_fixtures},
        {"path-addition closure", path_closure},
        {"reduction", reduction},
        {"format round-trips", round_trips},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        failed += !o.pass;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
