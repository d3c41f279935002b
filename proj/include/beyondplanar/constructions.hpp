#pragma once

#include <string>
#include <vector>

#include "beyondplanar/drawing.hpp"
#include "beyondplanar/generators.hpp"
#include "beyondplanar/graph.hpp"

namespace bp {

// Boxes on the main diagonal; edge (u, v) with u < v leaves the top of box u,
// bends once and enters the left side of box v.
struct BoxVisibility {
    Graph graph;
    int width = 0;    // box side length
    int spacing = 0;  // box i is [spacing*i, spacing*i + width]^2
    std::vector<Point> box_lo, box_hi;
    // Per edge id.
    std::vector<int> top_slot;   // rank among the out-edges of the source, 0 = leftmost
    std::vector<int> left_slot;  // rank among the in-edges of the target, 0 = topmost
    std::vector<Point> port;     // on the top side of the source box
    std::vector<Point> bend;
    std::vector<Point> entry;  // on the left side of the target box

    // The vertical and horizontal segment of an edge.
    std::pair<Point, Point> vertical(EdgeId e) const { return {port[e], bend[e]}; }
    std::pair<Point, Point> horizontal(EdgeId e) const { return {bend[e], entry[e]}; }
};

BoxVisibility build_box_visibility(const Graph& g);

// Edge pairs (a < b) whose routes cross, from the interleaving u < u' < v < v'.
std::vector<std::pair<EdgeId, EdgeId>> box_visibility_crossings(const BoxVisibility& bv);

// Drawing of subdivide(g, 2) from the convex drawing; every crossing lies on a middle segment.
Drawing fcf_2subdivision(const Graph& g);
// Drawing of subdivide(g, 1); the bend of every box route becomes the new vertex.
Drawing quasi_1subdivision(const Graph& g);
// Every edge has exactly three bends and every crossing is vertical x horizontal.
Drawing rac_3bend(const Graph& g);

// Drawings of node_to_circle(g) (with the rotation they induce). Both need min degree 3.
Drawing convex_n2c_fcf(const Graph& g);
Drawing boxvis_n2c_quasi(const Graph& g);

// Replaces every vertex of d by a small polygon through its incident edges.
// Refuses the class tag "fan".
Drawing n2c_transform(const Drawing& d, const std::string& class_tag = "");

struct PathClass {
    enum class Kind { fcf, quasi3, kgap };
    Kind kind = Kind::fcf;
    int k = 1;
};

// "fcf", "quasi3", "kgap<k>" or "<k>-gap".
PathClass parse_path_class(const std::string& tag);
std::string to_string(const PathClass& cls);

// Drawing of add_path(graph, u, v, len) preserving the class; every path edge
// is crossed at most once and the first and last path edges are uncrossed.
Drawing route_path(const Drawing& d, Vertex u, Vertex v, const PathClass& cls);

Drawing draw_nested(int k);
Drawing draw_hermit(int k);
Drawing draw_xw(int k);
Drawing draw_tile();
// Straight-line RAC drawing; endpoints must have local coordinates x, y <= 3
// and the endpoints of one tile must lie in distinct columns.
Drawing draw_tiles(const gen::TilesSpec& spec);

}  // namespace bp
