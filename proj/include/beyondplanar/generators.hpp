#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "beyondplanar/graph.hpp"

namespace bp::gen {

Graph complete(int n);
// Left side 0..p-1, right side p..p+q-1.
Graph biclique(int p, int q);
// Vertex id is the bit string; edges join ids at Hamming distance one.
Graph hypercube(int d);
// King's graph on a w x h grid, vertex (x, y) -> y * w + x. king(5, 5) is the tile.
Graph king(int w, int h);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
// G(n, percent/100) from a 64-bit Mersenne twister; identical output for identical arguments.
Graph random(int n, int percent, std::uint64_t seed);

// Cube-connected cycle: vertex (i, x) -> i * 2^d + x, cycle edges
// (i, x)-(i+1 mod d, x) labeled "inner", cube edges (i, x)-(i, x ^ 2^i)
// labeled "binding".
Graph ccc(int d);

// Crossed nested triangles: a_i = 3i, b_i = 3i + 1, c_i = 3i + 2 with T_0 outermost.
Graph nested(int k);
inline Vertex nested_a(int i) { return 3 * i; }
inline Vertex nested_b(int i) { return 3 * i + 1; }
inline Vertex nested_c(int i) { return 3 * i + 2; }

// Extended wheel XW_2k: poles 0 and 1, rim 2 .. 2k+1.
Graph xw(int k);

// Nested triangles plus hermits. For level i < k-1 the hermits on
// a_i a_{i+1}, b_i b_{i+1}, c_i c_{i+1} are 3k + 3i, +1, +2; the outer hermit
// is 6k - 3 and the inner hermit 6k - 2.
Graph hermit(int k);
inline Vertex hermit_vertex(int k, int i, int which) { return 3 * k + 3 * i + which; }

enum class FatVariant { k7, k6, plain };

// Triangulated 4 x 4 grid, (x, y) with 1 <= x, y <= 4 -> 4 (y - 1) + (x - 1),
// diagonals (x, y)-(x+1, y+1). Each grid edge becomes a clique on its two ends
// plus 5 (K7), 4 (K6) or 0 (plain) private vertices appended in edge order.
Graph fat_grid(FatVariant variant);
inline Vertex fat_grid_vertex(int x, int y) { return 4 * (y - 1) + (x - 1); }

struct TilesSpec {
    int tiles = 2;
    // Global vertex pairs (tile * 25 + local); endpoints in distinct tiles.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int paths_per_pair = 60;
    int path_length = 15;
};

// Disjoint tiles plus paths_per_pair internally disjoint paths of
// path_length edges per pair. Path vertices are appended pair by pair, path
// by path, each ordered from the first endpoint. Empty pairs default to the
// centers of consecutive tiles.
Graph tiles(TilesSpec spec);
TilesSpec normalized(TilesSpec spec);

}  // namespace bp::gen
