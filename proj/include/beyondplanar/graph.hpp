#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bp {

using Vertex = int;
using EdgeId = std::size_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;

    bool has(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool shares_vertex(const Edge& e) const { return has(e.u) || has(e.v); }
};

inline Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Cyclic order of neighbors around every vertex.
using Rotation = std::vector<std::vector<Vertex>>;

// Simple undirected graph with canonical edge order (u < v, sorted
// lexicographically). Edge ids are positions in that order.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes; throws InputError on loops, duplicates or
    // endpoints out of range.
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    EdgeId edge_id(Vertex a, Vertex b) const;  // throws InputError when absent
    bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    // Sorted neighbor lists.
    std::vector<std::vector<Vertex>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    int min_degree() const;

    const std::optional<Rotation>& rotation() const { return rotation_; }
    Graph with_rotation(Rotation rot) const;  // validates
    Graph without_rotation() const;

    const std::map<Edge, std::string>& labels() const { return labels_; }
    std::optional<std::string> label(EdgeId e) const;
    Graph with_labels(std::map<Edge, std::string> labels) const;

    // Provenance of the graph, e.g. "complete 12" or "subdivide(2)".
    const std::string& family() const { return family_; }
    Graph with_family(std::string family) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<Rotation> rotation_;
    std::map<Edge, std::string> labels_;
    std::string family_;
};

// Shortest path (BFS, smallest-index tie breaking) from s to t; empty when
// t is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t);

// Connected component id per vertex.
std::vector<int> components(const Graph& g);

}  // namespace bp
