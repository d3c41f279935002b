#pragma once

#include <array>
#include <string>
#include <vector>

#include "beyondplanar/drawing.hpp"
#include "beyondplanar/graph.hpp"

// Gadget graph of the 3-PARTITION reduction for fan-crossing free drawings.
namespace bp::red {

struct Instance {
    std::vector<long> A;
    long B = 0;
    int m = 0;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Triples of indices into A.
struct Witness {
    std::vector<std::array<int, 3>> triples;

    friend bool operator==(const Witness&, const Witness&) = default;
};

// Throws InputError naming the violated constraint; refuses m*B > 100000.
Instance validate_instance(const std::vector<long>& A, long B);
void validate_witness(const Instance& inst, const Witness& w);

struct FatEdge {
    Vertex u = 0;
    Vertex v = 0;
    std::array<Vertex, 3> aux{};
    std::string kind;  // "spoke", "radial" or "meridian"
};

struct Splitter {
    long value = 0;
    Vertex center = 0;
    std::vector<Vertex> satellites;  // satellites[0] is joined to the transmitter center
    std::vector<Vertex> connectors;  // connectors[i] lies between satellites[i] and the center
};

struct Gadget {
    Graph graph;
    std::vector<std::string> role;  // per vertex
    Vertex transmitter_center = 0;
    Vertex collector_center = 1;
    std::vector<Vertex> t_outer, t_inner;  // u_1..u_3m and u'_1..u'_3m
    std::vector<Vertex> c_outer, c_inner;  // v_1..v_Bm and v'_1..v'_Bm
    std::vector<Splitter> splitters;       // one per element of A, in order
    std::vector<FatEdge> fat_edges;
    std::vector<std::size_t> meridians;  // indices of the fat edges (u_3i, v_Bi)
};

Gadget build_gadget_graph(const Instance& inst);

// 1-planar drawing of the gadget graph for a solved instance.
Drawing build_witness_drawing(const Instance& inst, const Witness& w);

}  // namespace bp::red
