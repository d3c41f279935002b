#pragma once

#include <vector>

#include "beyondplanar/graph.hpp"

namespace bp {

enum class OpKind { subdivision, node_to_circle, path_addition };

// What an element of an operation's output came from.
struct Origin {
    enum class Kind { vertex, edge, path };
    Kind kind = Kind::vertex;
    int index = 0;  // vertex or edge id of the origin graph; -1 for path

    friend bool operator==(const Origin&, const Origin&) = default;
};

struct OpTrace {
    Graph origin;
    OpKind kind = OpKind::subdivision;
    std::vector<Origin> vertex_map;  // one entry per output vertex
    std::vector<Origin> edge_map;    // one entry per output edge id
};

template <typename T>
struct Traced {
    T result;
    OpTrace trace;
};

// Each edge e becomes a path with counts[e] new interior vertices. New vertices
// are appended in edge id order; the chain of edge (u, v) runs from u to v.
Traced<Graph> subdivide(const Graph& g, const std::vector<int>& counts);
Traced<Graph> subdivide(const Graph& g, int uniform);

// Interior vertices of edge e's chain in a subdivision, ordered from the
// smaller endpoint to the larger.
std::vector<Vertex> subdivision_chain(const Graph& origin, const std::vector<int>& counts, EdgeId e);

// Replaces every vertex by a cycle of its degree. Cycle order follows the
// rotation when present, otherwise ascending neighbor index. Circle vertex
// (v, i) gets id offset(v) + i where offset is the prefix sum of degrees.
// Edges are labeled "inner" or "binding"; the output carries a rotation at
// every circle vertex (previous, next, binding partner).
Traced<Graph> node_to_circle(const Graph& g);

// Id of the circle vertex of v that carries the binding edge towards w.
Vertex circle_vertex(const Graph& origin, Vertex v, Vertex w);

// Adds a u-v path of `length` edges whose len-1 interior vertices are
// numbered n, n+1, ... from u to v.
Traced<Graph> add_path(const Graph& g, Vertex u, Vertex v, int length);

// Inverse of subdivide: contracts every vertex introduced by the trace.
Graph contract_subdivision(const Graph& subdivided, const OpTrace& trace);

}  // namespace bp
