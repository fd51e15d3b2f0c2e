#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edgemon/graph.hpp"

namespace edgemon {

// Rooted decomposition tree of a cograph. Leaves carry vertex ids; internal
// nodes are a disjoint union or a join (complete bipartite between children).
class Cotree {
public:
    enum class Kind { leaf, disjoint_union, join };

    struct Node {
        Kind kind = Kind::leaf;
        Vertex vertex = -1;
        std::vector<int> children;
    };

    static Cotree leaf(Vertex v);
    // Throws InputError when fewer than two children are given.
    static Cotree combine(Kind kind, std::vector<Cotree> children);

    // Expression syntax: (leaf 0), (union T T ...), (join T T ...).
    static Cotree parse(std::string_view expression);
    std::string to_string() const;

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(int index) const { return nodes_.at(index); }
    int root() const noexcept { return root_; }

    // Leaf vertices, sorted.
    VertexSet vertices() const;
    VertexSet vertices_below(int index) const;

    // Graph on vertices 0..n-1; throws InputError unless the leaves are exactly 0..n-1.
    Graph realize() const;
    bool realizes(const Graph& g) const;

private:
    int append_subtree(const Cotree& other);

    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace edgemon
