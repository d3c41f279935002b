#include "beyondplanar/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "beyondplanar/errors.hpp"

namespace bp::gen {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError("invalid parameter: " + what);
}

std::string num(int x) { return std::to_string(x); }

}  // namespace

Graph complete(int n) {
    require(n >= 1, "complete n needs n >= 1");
    EdgeList edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, std::move(edges)).with_family("complete " + num(n));
}

Graph biclique(int p, int q) {
    require(p >= 1 && q >= 1, "biclique p q needs p, q >= 1");
    EdgeList edges;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) edges.emplace_back(a, p + b);
    return Graph(p + q, std::move(edges)).with_family("biclique " + num(p) + " " + num(q));
}

Graph hypercube(int d) {
    require(d >= 1 && d <= 20, "hypercube d needs 1 <= d <= 20");
    int n = 1 << d;
    EdgeList edges;
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < d; ++i) {
            int y = x ^ (1 << i);
            if (x < y) edges.emplace_back(x, y);
        }
    return Graph(n, std::move(edges)).with_family("hypercube " + num(d));
}

Graph king(int w, int h) {
    require(w >= 1 && h >= 1, "king w h needs w, h >= 1");
    EdgeList edges;
    auto id = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) edges.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < h) edges.emplace_back(id(x, y), id(x, y + 1));
            if (x + 1 < w && y + 1 < h) {
                edges.emplace_back(id(x, y), id(x + 1, y + 1));
                edges.emplace_back(id(x + 1, y), id(x, y + 1));
            }
        }
    return Graph(w * h, std::move(edges)).with_family("king " + num(w) + " " + num(h));
}

Graph path(int n) {
    require(n >= 1, "path n needs n >= 1");
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges)).with_family("path " + num(n));
}

Graph cycle(int n) {
    require(n >= 3, "cycle n needs n >= 3");
    EdgeList edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges)).with_family("cycle " + num(n));
}

Graph star(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    EdgeList edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges)).with_family("star " + num(leaves));
}

Graph ccc(int d) {
    require(d >= 3 && d <= 16, "ccc d needs 3 <= d <= 16");
    int cube = 1 << d;
    auto id = [cube](int i, int x) { return i * cube + x; };
    EdgeList edges;
    std::map<Edge, std::string> labels;
    for (int i = 0; i < d; ++i)
        for (int x = 0; x < cube; ++x) {
            Vertex a = id(i, x);
            Vertex b = id((i + 1) % d, x);
            edges.emplace_back(a, b);
            labels[canonical(a, b)] = "inner";
            int y = x ^ (1 << i);
            if (x < y) {
                edges.emplace_back(a, id(i, y));
                labels[canonical(a, id(i, y))] = "binding";
            }
        }
    return Graph(d * cube, std::move(edges)).with_labels(std::move(labels)).with_family("ccc " + num(d));
}

namespace {

EdgeList nested_edges(int k) {
    EdgeList edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(nested_a(i), nested_b(i));
        edges.emplace_back(nested_b(i), nested_c(i));
        edges.emplace_back(nested_a(i), nested_c(i));
    }
    for (int i = 0; i + 1 < k; ++i) {
        Vertex outer[3] = {nested_a(i), nested_b(i), nested_c(i)};
        Vertex inner[3] = {nested_a(i + 1), nested_b(i + 1), nested_c(i + 1)};
        for (int s = 0; s < 3; ++s) {
            int t = (s + 1) % 3;
            edges.emplace_back(outer[s], inner[s]);
            edges.emplace_back(outer[s], inner[t]);
            edges.emplace_back(outer[t], inner[s]);
        }
    }
    return edges;
}

}  // namespace

Graph random(int n, int percent, std::uint64_t seed) {
    require(n >= 1 && n <= 100000, "random n needs 1 <= n <= 100000");
    require(percent >= 0 && percent <= 100, "random edge percentage must lie in 0..100");
    std::mt19937_64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return Graph(n, std::move(edges)).with_family("random " + num(n) + " " + num(percent) + " " + std::to_string(seed));
}

Graph nested(int k) {
    require(k >= 1, "nested k needs k >= 1");
    return Graph(3 * k, nested_edges(k)).with_family("nested " + num(k));
}

Graph xw(int k) {
    require(k >= 3, "xw k needs k >= 3");
    int rim = 2 * k;
    EdgeList edges;
    for (int i = 0; i < rim; ++i) {
        Vertex r = 2 + i;
        edges.emplace_back(0, r);
        edges.emplace_back(1, r);
        edges.emplace_back(r, 2 + (i + 1) % rim);
        edges.emplace_back(r, 2 + (i + 2) % rim);
    }
    return Graph(rim + 2, std::move(edges)).with_family("xw " + num(k));
}

Graph hermit(int k) {
    require(k >= 3, "hermit k needs k >= 3");
    EdgeList edges = nested_edges(k);
    for (int i = 0; i + 1 < k; ++i) {
        Vertex h[3];
        for (int s = 0; s < 3; ++s) {
            h[s] = hermit_vertex(k, i, s);
            edges.emplace_back(h[s], 3 * i + s);
            edges.emplace_back(h[s], 3 * (i + 1) + s);
        }
        edges.emplace_back(h[0], h[1]);
        edges.emplace_back(h[1], h[2]);
        edges.emplace_back(h[0], h[2]);
    }
    Vertex outer = 6 * k - 3;
    Vertex inner = 6 * k - 2;
    for (int s = 0; s < 3; ++s) {
        edges.emplace_back(outer, s);
        edges.emplace_back(inner, 3 * (k - 1) + s);
    }
    return Graph(6 * k - 1, std::move(edges)).with_family("hermit " + num(k));
}

Graph fat_grid(FatVariant variant) {
    int extra = variant == FatVariant::k7 ? 5 : variant == FatVariant::k6 ? 4 : 0;
    std::vector<std::pair<Vertex, Vertex>> grid;
    for (int y = 1; y <= 4; ++y)
        for (int x = 1; x <= 4; ++x) {
            if (x < 4) grid.emplace_back(fat_grid_vertex(x, y), fat_grid_vertex(x + 1, y));
            if (y < 4) grid.emplace_back(fat_grid_vertex(x, y), fat_grid_vertex(x, y + 1));
            if (x < 4 && y < 4) grid.emplace_back(fat_grid_vertex(x, y), fat_grid_vertex(x + 1, y + 1));
        }
    std::sort(grid.begin(), grid.end());
    EdgeList edges;
    std::map<Edge, std::string> labels;
    Vertex next = 16;
    for (auto [u, v] : grid) {
        std::vector<Vertex> clique{u, v};
        for (int i = 0; i < extra; ++i) clique.push_back(next++);
        std::string tag = "fat " + num(u) + "-" + num(v);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                edges.emplace_back(clique[a], clique[b]);
                labels[canonical(clique[a], clique[b])] = tag;
            }
    }
    const char* name = variant == FatVariant::k7 ? "K7" : variant == FatVariant::k6 ? "K6" : "plain";
    return Graph(next, std::move(edges)).with_labels(std::move(labels)).with_family(std::string("fat_grid ") + name);
}

TilesSpec normalized(TilesSpec spec) {
    require(spec.tiles >= 1, "tiles needs at least one tile");
    require(spec.paths_per_pair >= 1, "tiles needs at least one path per pair");
    require(spec.path_length >= 2, "tiles path length must be at least 2");
    if (spec.pairs.empty())
        for (int t = 0; t + 1 < spec.tiles; ++t) spec.pairs.emplace_back(25 * t + 12, 25 * (t + 1) + 12);
    for (auto [a, b] : spec.pairs) {
        require(a >= 0 && b >= 0 && a < 25 * spec.tiles && b < 25 * spec.tiles, "tiles pair endpoint out of range");
        require(a / 25 != b / 25, "tiles pair " + num(a) + "-" + num(b) + " lies inside one tile");
    }
    return spec;
}

Graph tiles(TilesSpec spec) {
    spec = normalized(std::move(spec));
    Graph tile = king(5, 5);
    EdgeList edges;
    for (int t = 0; t < spec.tiles; ++t)
        for (const auto& e : tile.edges()) edges.emplace_back(25 * t + e.u, 25 * t + e.v);
    Vertex next = 25 * spec.tiles;
    for (auto [a, b] : spec.pairs)
        for (int p = 0; p < spec.paths_per_pair; ++p) {
            Vertex prev = a;
            for (int i = 1; i < spec.path_length; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, b);
        }
    return Graph(next, std::move(edges))
        .with_family("tiles " + num(spec.tiles) + " pairs " + num(static_cast<int>(spec.pairs.size())) + " p " +
                     num(spec.paths_per_pair) + " len " + num(spec.path_length));
}

}  // namespace bp::gen
