#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace edgemon {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Unordered pair stored normalized (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Throws InputError on loops, parallel edges or out-of-range endpoints.
    Graph(int vertex_count, std::span<const Edge> edges);
    Graph(int vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    static Graph complete(int vertex_count);
    static Graph edgeless(int vertex_count) { return Graph(vertex_count, std::span<const Edge>{}); }

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Sorted lexicographically.
    std::span<const Edge> edges() const noexcept { return edges_; }
    // Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool adjacent(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

    bool is_complete() const noexcept;
    bool is_clique(std::span<const Vertex> vertices) const;
    bool is_independent(std::span<const Vertex> vertices) const;

    // N[S], sorted.
    VertexSet closed_neighborhood(std::span<const Vertex> vertices) const;

    // Connected components, each sorted, ordered by smallest member.
    std::vector<VertexSet> components() const;
    bool is_connected() const;

    std::size_t min_degree() const;
    std::size_t max_degree() const;

    // Graph induced by `vertices`; local vertex i corresponds to vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;
    Graph complement() const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

// Set helpers over sorted vectors.
VertexSet make_set(std::vector<Vertex> vertices);
bool set_contains(std::span<const Vertex> set, Vertex v);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace edgemon
