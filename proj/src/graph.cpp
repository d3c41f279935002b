#include "beyondplanar/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "beyondplanar/errors.hpp"

namespace bp {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InputError("endpoint out of range in edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ")");
        if (a == b) throw InputError("loop at vertex " + std::to_string(a));
        edges_.push_back(canonical(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    Edge e = canonical(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
    auto id = find_edge(a, b);
    if (!id) throw InputError("no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return *id;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int Graph::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Graph::min_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
}

Graph Graph::with_rotation(Rotation rot) const {
    if (rot.size() != static_cast<std::size_t>(n_)) throw InputError("rotation must list every vertex");
    auto adj = adjacency();
    for (std::size_t v = 0; v < rot.size(); ++v) {
        auto sorted = rot[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != adj[v])
            throw InputError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
    Graph g = *this;
    g.rotation_ = std::move(rot);
    return g;
}

Graph Graph::without_rotation() const {
    Graph g = *this;
    g.rotation_.reset();
    return g;
}

std::optional<std::string> Graph::label(EdgeId e) const {
    auto it = labels_.find(edges_.at(e));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::with_labels(std::map<Edge, std::string> labels) const {
    for (const auto& [e, tag] : labels) {
        if (!find_edge(e.u, e.v)) throw InputError("label on missing edge (" + std::to_string(e.u) + "," +
                                                   std::to_string(e.v) + ")");
    }
    Graph g = *this;
    g.labels_.clear();
    for (auto& [e, tag] : labels) g.labels_[canonical(e.u, e.v)] = std::move(tag);
    return g;
}

Graph Graph::with_family(std::string family) const {
    Graph g = *this;
    g.family_ = std::move(family);
    return g;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t) {
    auto adj = g.adjacency();
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    std::deque<Vertex> queue{s};
    parent[s] = s;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == t) break;
        for (Vertex y : adj[x]) {
            if (parent[y] != -1) continue;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    if (parent[t] == -1) return {};
    std::vector<Vertex> path{t};
    while (path.back() != s) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<Vertex> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj[x]) {
                if (comp[y] != -1) continue;
                comp[y] = next;
                stack.push_back(y);
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace bp
