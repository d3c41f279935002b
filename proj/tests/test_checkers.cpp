#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <set>

#include "beyondplanar/checkers.hpp"
#include "beyondplanar/drawing.hpp"
#include "beyondplanar/errors.hpp"
#include "beyondplanar/generators.hpp"
#include "beyondplanar/oracle.hpp"
#include "support.hpp"

using namespace bp;
using namespace bp::fixtures;

namespace {

// Proper crossing of two closed segments by orientation signs only.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    return orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0;
}

long brute_crossings(const Drawing& d) {
    const Graph& g = d.graph;
    long count = 0;
    for (EdgeId a = 0; a < g.m(); ++a)
        for (EdgeId b = a + 1; b < g.m(); ++b) {
            if (g.edge(a).shares_vertex(g.edge(b))) continue;
            count += segments_cross(d.positions[g.edge(a).u], d.positions[g.edge(a).v], d.positions[g.edge(b).u],
                                    d.positions[g.edge(b).v]);
        }
    return count;
}

// Four chords (i, i+4) of an octagon; every pair crosses.
CrossingStructure four_chords() {
    Graph g(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    std::vector<Crossing> cs;
    for (EdgeId a = 0; a < 4; ++a)
        for (EdgeId b = a + 1; b < 4; ++b) cs.push_back({a, b, ratio(b + 1, 6), ratio(a + 1, 6), {}});
    return make_crossing_structure(g, cs);
}

std::vector<std::vector<EdgeId>> crossers_of(const CrossingStructure& cs) {
    std::vector<std::vector<EdgeId>> out(cs.graph.m());
    for (const auto& c : cs.crossings) {
        out[c.a].push_back(c.b);
        out[c.b].push_back(c.a);
    }
    return out;
}

bool cross_pair(const CrossingStructure& cs, EdgeId a, EdgeId b) {
    for (const auto& c : cs.crossings)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return true;
    return false;
}

}  // namespace

TEST(Extract, SingleCross) {
    Graph g(4, {{0, 1}, {2, 3}});
    Drawing d = straight_line(g, {{0, 0}, {2, 2}, {0, 2}, {2, 0}});
    auto cs = extract_crossings(d);
    ASSERT_EQ(cs.crossings.size(), 1u);
    EXPECT_EQ(*cs.crossings[0].at, Point(1, 1));
    EXPECT_EQ(cs.crossings[0].ta, Rational(1, 2));
}

TEST(Extract, CollinearPathHasNoCrossings) {
    Graph g = gen::path(5);
    Drawing d = straight_line(g, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    EXPECT_TRUE(extract_crossings(d).crossings.empty());
}

TEST(Extract, ConvexCompleteGraphsMatchFourSubsets) {
    for (int n = 4; n <= 12; ++n) {
        auto cs = extract_crossings(convex_drawing(gen::complete(n)));
        EXPECT_EQ(static_cast<long>(cs.crossings.size()), binomial(n, 4));
        EXPECT_EQ(Integer(binomial(n, 4)), oracle::convex_crossing_count(n));
    }
    EXPECT_EQ(extract_crossings(convex_drawing(gen::cycle(4))).crossings.size(), 0u);
}

TEST(Extract, RandomStraightLineDrawingsMatchBruteForce) {
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 200) {
        Graph g = gen::random(4 + static_cast<int>(rng() % 6), 50, rng());
        std::vector<Point> pts;
        for (int v = 0; v < g.n(); ++v)
            pts.emplace_back(static_cast<long>(rng() % 40), static_cast<long>(rng() % 40));
        Drawing d = straight_line(g, pts);
        CrossingStructure cs;
        try {
            cs = extract_crossings(d);
        } catch (const GeometryError&) {
            continue;
        }
        ASSERT_EQ(static_cast<long>(cs.crossings.size()), brute_crossings(d));
        for (const auto& c : cs.crossings) {
            auto pa = d.polyline(c.a), pb = d.polyline(c.b);
            EXPECT_EQ(lerp(pa[0], pa[1], c.ta), *c.at);
            EXPECT_EQ(lerp(pb[0], pb[1], c.tb), *c.at);
        }
        EXPECT_TRUE(validate_simple(cs).holds);
        ++checked;
    }
}

TEST(Extract, DegeneraciesThrow) {
    Graph two(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(extract_crossings(straight_line(two, {{0, 0}, {4, 0}, {1, 0}, {3, 0}})), GeometryError);
    Graph tee(3, {{0, 1}, {1, 2}});
    Graph touch(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(extract_crossings(straight_line(touch, {{0, 0}, {4, 0}, {2, 0}, {2, 3}})), GeometryError);
    Graph three(6, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_THROW(extract_crossings(straight_line(three, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}})),
                 GeometryError);
    EXPECT_THROW(validate_drawing(straight_line(tee, {{0, 0}, {0, 0}, {1, 1}})), GeometryError);
}

TEST(Simple, Fixtures) {
    Graph g = gen::complete(4);
    EXPECT_TRUE(validate_simple(make_crossing_structure(g, {})).holds);
    auto adj = validate_simple(
        make_crossing_structure(g, {{g.edge_id(0, 1), g.edge_id(1, 2), Rational(1, 2), Rational(1, 2), {}}}));
    EXPECT_FALSE(adj.holds);
    EXPECT_EQ(adj.reason, "adjacent edges cross");
    EdgeId a = g.edge_id(0, 2), b = g.edge_id(1, 3);
    auto twice = validate_simple(make_crossing_structure(
        g, {{a, b, Rational(1, 3), Rational(1, 3), {}}, {a, b, Rational(2, 3), Rational(2, 3), {}}}));
    EXPECT_FALSE(twice.holds);
    EXPECT_EQ(twice.reason, "pair crosses twice");
    EXPECT_THROW(check_fcf(make_crossing_structure(
                     g, {{a, b, Rational(1, 3), Rational(1, 3), {}}, {a, b, Rational(2, 3), Rational(2, 3), {}}})),
                 InputError);
}

TEST(KPlanar, Fixtures) {
    EXPECT_TRUE(check_k_planar(k5_fixture_a(), 1).holds);
    auto e = k5_fixture_e();
    auto v = check_k_planar(e, 2);
    EXPECT_FALSE(v.holds);
    ASSERT_FALSE(v.edges.empty());
    EXPECT_EQ(v.edges[0], e.graph.edge_id(3, 4));
    EXPECT_TRUE(check_k_planar(e, static_cast<int>(e.crossings.size())).holds);
}

TEST(Fcf, Fixtures) {
    EXPECT_TRUE(check_fcf(k5_fixture_a()).holds);
    auto e = k5_fixture_e();
    auto v = check_fcf(e);
    EXPECT_FALSE(v.holds);
    ASSERT_EQ(v.edges.size(), 3u);
    EXPECT_EQ(v.edges[0], e.graph.edge_id(3, 4));
    EXPECT_EQ(v.edges[1], e.graph.edge_id(0, 1));
    EXPECT_EQ(v.edges[2], e.graph.edge_id(1, 2));
    EXPECT_FALSE(check_fcf(extract_crossings(convex_drawing(gen::complete(5)))).holds);
}

TEST(Fan, Fixtures) {
    EXPECT_FALSE(check_fan(k5_fixture_e()).holds);
    EXPECT_TRUE(check_fan(extract_crossings(convex_drawing(gen::complete(5)))).holds);
    EXPECT_TRUE(check_fan(k5_fixture_a()).holds);
}

TEST(Quasi, Fixtures) {
    EXPECT_TRUE(check_quasi(k5_fixture_e(), 3).holds);
    auto v = check_quasi(four_chords(), 3);
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.edges.size(), 3u);
    EXPECT_TRUE(check_quasi(four_chords(), 5).holds);
    EXPECT_FALSE(check_quasi(four_chords(), 4).holds);
    EXPECT_TRUE(check_quasi(make_crossing_structure(gen::complete(6), {}), 3).holds);
    EXPECT_THROW(check_quasi(four_chords(), 2), InputError);
}

TEST(Quasi, BudgetIsReported) {
    auto cs = extract_crossings(convex_drawing(gen::complete(12)));
    EXPECT_THROW(check_quasi(cs, 7, 10), ResourceBoundError);
}

TEST(Gap, Fixtures) {
    auto e = k5_fixture_e();
    auto v = check_k_gap(e, 1);
    ASSERT_TRUE(v.holds);
    ASSERT_TRUE(v.assignment.has_value());
    EXPECT_TRUE(verify_assignment(e, *v.assignment));
    auto chords = check_k_gap(four_chords(), 1);
    EXPECT_FALSE(chords.holds);
    EXPECT_EQ(chords.edges.size(), 4u);
    EXPECT_FALSE(oracle::brute_gap(four_chords(), 1).holds);
    EXPECT_TRUE(check_k_gap(four_chords(), 2).holds);
    EXPECT_TRUE(check_k_gap(make_crossing_structure(gen::complete(4), {}), 0).holds);
    EXPECT_FALSE(check_k_gap(k5_fixture_a(), 0).holds);
    EXPECT_TRUE(oracle::brute_gap(make_crossing_structure(gen::complete(4), {}), 0).holds);
}

TEST(Gap, AssignmentVerificationRejectsOverload) {
    auto e = k5_fixture_e();
    GapAssignment all_on_45{1, std::vector<EdgeId>(3, e.graph.edge_id(3, 4))};
    EXPECT_FALSE(verify_assignment(e, all_on_45));
    GapAssignment foreign{1, {0, 0, 0}};
    EXPECT_FALSE(verify_assignment(e, foreign));
}

TEST(Rac, Fixtures) {
    Graph g(4, {{0, 1}, {2, 3}});
    EXPECT_TRUE(check_rac(straight_line(g, {{0, 1}, {2, 1}, {1, 0}, {1, 2}}), 0).holds);
    auto v = check_rac(convex_drawing(gen::complete(5)), 0);
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.edges.size(), 2u);
    Drawing bent = straight_line(Graph(2, {{0, 1}}), {{0, 0}, {2, 0}});
    bent.bends[0] = {Point(1, 1)};
    EXPECT_FALSE(check_rac(bent, 0).holds);
    EXPECT_TRUE(check_rac(bent, 1).holds);
}

TEST(Oracle, BruteQuasiMirrorsExamples) {
    EXPECT_TRUE(oracle::brute_quasi(k5_fixture_e(), 3).holds);
    EXPECT_FALSE(oracle::brute_quasi(four_chords(), 3).holds);
    EXPECT_TRUE(oracle::brute_quasi(make_crossing_structure(gen::complete(5), {}), 3).holds);
    EXPECT_EQ(oracle::convex_crossing_count(3), 0);
    EXPECT_EQ(oracle::convex_crossing_count(5), 5);
    EXPECT_EQ(oracle::convex_crossing_count(12), 495);
}

class RandomStructures : public ::testing::TestWithParam<int> {};

TEST_P(RandomStructures, CheckersAgreeWithOraclesAndWitnessesReplay) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
    for (int i = 0; i < 250; ++i) {
        auto cs = random_structure(rng, 5 + static_cast<int>(rng() % 6), 60, static_cast<int>(rng() % 13), 12);
        ASSERT_TRUE(validate_simple(cs).holds);
        auto crossers = crossers_of(cs);

        for (int k = 0; k <= 3; ++k) {
            auto gap = check_k_gap(cs, k);
            ASSERT_EQ(gap.holds, oracle::brute_gap(cs, k).holds);
            if (gap.holds) {
                EXPECT_TRUE(verify_assignment(cs, *gap.assignment));
            } else {
                std::set<EdgeId> s(gap.edges.begin(), gap.edges.end());
                long inside = 0;
                for (const auto& c : cs.crossings) inside += s.count(c.a) && s.count(c.b);
                EXPECT_GT(inside, static_cast<long>(k) * static_cast<long>(s.size()));
            }
            if (gap.holds) EXPECT_TRUE(check_k_gap(cs, k + 1).holds);

            auto kp = check_k_planar(cs, k);
            if (kp.holds) {
                EXPECT_TRUE(check_k_planar(cs, k + 1).holds);
                for (const auto& l : crossers) EXPECT_LE(static_cast<int>(l.size()), k);
            } else {
                EXPECT_GT(static_cast<int>(crossers[kp.edges[0]].size()), k);
            }
            if (check_k_planar(cs, 2 * k).holds) EXPECT_TRUE(gap.holds);
        }

        if (cs.graph.m() <= 25) {
            for (int k = 3; k <= 4; ++k) {
                auto q = check_quasi(cs, k);
                ASSERT_EQ(q.holds, oracle::brute_quasi(cs, k).holds);
                if (q.holds) EXPECT_TRUE(check_quasi(cs, k + 1).holds);
                if (!q.holds) {
                    ASSERT_EQ(static_cast<int>(q.edges.size()), k);
                    for (int a = 0; a < k; ++a)
                        for (int b = a + 1; b < k; ++b) EXPECT_TRUE(cross_pair(cs, q.edges[a], q.edges[b]));
                }
            }
        }

        auto fcf = check_fcf(cs);
        auto fan = check_fan(cs);
        bool multi = false;
        for (const auto& l : crossers) multi = multi || l.size() >= 2;
        if (check_k_planar(cs, 1).holds) {
            EXPECT_TRUE(fcf.holds);
            EXPECT_TRUE(fan.holds);
        }
        if (multi) EXPECT_FALSE(fcf.holds && fan.holds);
        if (!fcf.holds) {
            EXPECT_TRUE(cross_pair(cs, fcf.edges[0], fcf.edges[1]));
            EXPECT_TRUE(cross_pair(cs, fcf.edges[0], fcf.edges[2]));
            EXPECT_TRUE(cs.graph.edge(fcf.edges[1]).shares_vertex(cs.graph.edge(fcf.edges[2])));
        }
        if (!fan.holds) {
            std::set<Vertex> common{cs.graph.edge(fan.edges[1]).u, cs.graph.edge(fan.edges[1]).v};
            for (std::size_t j = 1; j < fan.edges.size(); ++j) {
                EXPECT_TRUE(cross_pair(cs, fan.edges[0], fan.edges[j]));
                const Edge& f = cs.graph.edge(fan.edges[j]);
                std::set<Vertex> next;
                for (Vertex w : common)
                    if (f.has(w)) next.insert(w);
                common = next;
            }
            EXPECT_TRUE(common.empty());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomStructures, ::testing::Values(1, 2, 3, 4));

TEST(Svg, OnePathPerEdgeDeterministicAndMarkers) {
    Drawing d = convex_drawing(gen::complete(5));
    std::string a = render_svg(d);
    EXPECT_EQ(a, render_svg(d));
    auto count = [](const std::string& s, const std::string& pat) {
        std::regex re(pat);
        return std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator());
    };
    EXPECT_EQ(count(a, "<path "), 10);
    EXPECT_EQ(count(a, "<circle "), 5);
    EXPECT_EQ(count(a, "class=\"crossing\""), 0);
    SvgOptions opt;
    opt.markers = true;
    EXPECT_EQ(count(render_svg(d, opt), "class=\"crossing\""), 5);
    EXPECT_EQ(a.rfind("<?xml", 0), 0u);
    EXPECT_NE(a.find("</svg>"), std::string::npos);
}
