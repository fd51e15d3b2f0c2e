#include "edgemon/graph.hpp"

#include <algorithm>
#include <string>

#include "edgemon/errors.hpp"

namespace edgemon {

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        const Edge e(raw.u, raw.v);
        if (e.u < 0 || e.v >= vertex_count) {
            throw InputError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) + "} out of range");
        }
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InputError("parallel edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::complete(int vertex_count) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < vertex_count; ++a)
        for (Vertex b = a + 1; b < vertex_count; ++b) edges.emplace_back(a, b);
    return Graph(vertex_count, edges);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b) return std::nullopt;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_complete() const noexcept {
    const auto n = static_cast<std::size_t>(vertex_count());
    return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool Graph::is_clique(std::span<const Vertex> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool Graph::is_independent(std::span<const Vertex> vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) return false;
    return true;
}

VertexSet Graph::closed_neighborhood(std::span<const Vertex> vertices) const {
    std::vector<char> mark(adjacency_.size(), 0);
    for (Vertex v : vertices) {
        mark.at(v) = 1;
        for (Vertex u : adjacency_[v]) mark[u] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<int> seen(adjacency_.size(), 0);
    std::vector<VertexSet> result;
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex u : adjacency_[comp[head]]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool Graph::is_connected() const { return components().size() <= 1; }

std::size_t Graph::min_degree() const {
    std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
    for (const auto& list : adjacency_) best = std::min(best, list.size());
    return best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> local(adjacency_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

Graph Graph::complement() const {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < vertex_count(); ++a)
        for (Vertex b = a + 1; b < vertex_count(); ++b)
            if (!adjacent(a, b)) edges.emplace_back(a, b);
    return Graph(vertex_count(), edges);
}

VertexSet make_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

bool set_contains(std::span<const Vertex> set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace edgemon
