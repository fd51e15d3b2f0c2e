#include "edgemon/monitoring.hpp"

#include <algorithm>
#include <string>

#include "edgemon/errors.hpp"

namespace edgemon {

VertexSet monitors(const Graph& g, Edge e) {
    if (!g.edge_index(e.u, e.v)) {
        throw InputError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    }
    // Neither endpoint can be a common neighbour of both in a simple graph.
    return set_intersection(g.neighbors(e.u), g.neighbors(e.v));
}

void require_vertex_subset(const Graph& g, std::span<const Vertex> s) {
    for (Vertex v : s)
        if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
    require_vertex_subset(g, s);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : s) in[v] = 1;
    return in;
}

int monitored_count(const Graph& g, const Edge& e, const std::vector<char>& in) {
    int count = 0;
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            count += in[*i];
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

bool is_monitoring_set(const Instance& inst, std::span<const Vertex> s) {
    const Graph& g = inst.graph();
    const auto in = membership(g, s);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inst.demand(i) == 0) continue;
        if (monitored_count(g, edges[i], in) < inst.demand(i)) return false;
    }
    return true;
}

std::vector<EdgeDeficit> monitoring_deficits(const Instance& inst, std::span<const Vertex> s) {
    const Graph& g = inst.graph();
    const auto in = membership(g, s);
    std::vector<EdgeDeficit> out;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inst.demand(i) == 0) continue;
        const int have = monitored_count(g, edges[i], in);
        if (have < inst.demand(i)) out.push_back({edges[i], inst.demand(i), have});
    }
    return out;
}

DominationProfile domination_predicates(const Graph& g, std::span<const Vertex> s) {
    const auto in = membership(g, s);
    DominationProfile p{true, true, true};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        int open = 0;
        for (Vertex y : g.neighbors(x)) open += in[y];
        const int closed = open + in[x];
        if (closed < 1) p.dominating = false;
        if (open < 1) p.total = false;
        if (closed < 2) p.double_dominating = false;
    }
    return p;
}

bool feasibility_precheck(const Instance& inst) {
    const Graph& g = inst.graph();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inst.demand(i) == 0) continue;
        if (static_cast<std::size_t>(inst.demand(i)) > monitors(g, edges[i]).size()) return false;
    }
    return true;
}

}  // namespace edgemon
