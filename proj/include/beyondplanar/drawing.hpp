#pragma once

#include <string>
#include <vector>

#include "beyondplanar/graph.hpp"
#include "beyondplanar/rational.hpp"
#include "beyondplanar/verdict.hpp"

namespace bp {

struct Drawing {
    Graph graph;
    std::vector<Point> positions;           // per vertex
    std::vector<std::vector<Point>> bends;  // per edge id, interior points from edge.u to edge.v

    // position(u), bends..., position(v)
    std::vector<Point> polyline(EdgeId e) const;
    std::size_t bend_count(EdgeId e) const { return bends.at(e).size(); }

    friend bool operator==(const Drawing&, const Drawing&) = default;
};

// A straight-line drawing of g at the given points.
Drawing straight_line(const Graph& g, std::vector<Point> positions);

struct Crossing {
    EdgeId a = 0;  // a < b
    EdgeId b = 0;
    Rational ta;  // position along a in (0, 1): (segment index + local t) / segment count
    Rational tb;
    std::optional<Point> at;  // absent for authored fixtures

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingStructure {
    Graph graph;
    std::vector<Crossing> crossings;  // sorted by (a, b)

    // For every edge, indices of its crossings ordered along the edge.
    std::vector<std::vector<std::size_t>> per_edge() const;
    // For every edge, the edges crossing it in order along the edge.
    std::vector<std::vector<EdgeId>> crossers() const;

    friend bool operator==(const CrossingStructure&, const CrossingStructure&) = default;
};

// Sorts crossings canonically, swapping (a, b) roles where needed.
CrossingStructure make_crossing_structure(Graph g, std::vector<Crossing> crossings);

// Checks the Drawing invariants; throws GeometryError naming the problem.
void validate_drawing(const Drawing& d);

// Every transversal crossing between non-adjacent edges. Throws GeometryError
// on any degeneracy (overlap, touching, concurrency, double crossing).
CrossingStructure extract_crossings(const Drawing& d);

// Vertices on the parabola (t, t^2) for t = 1..n, straight-line edges.
Drawing convex_drawing(const Graph& g);

Verdict validate_simple(const CrossingStructure& cs);

struct SvgOptions {
    int precision = 6;  // significant digits
    bool markers = false;
    double size = 800;  // target width of the longer side in px
};

std::string render_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace bp
