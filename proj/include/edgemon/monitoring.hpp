#pragma once

#include <span>
#include <vector>

#include "edgemon/instance.hpp"

namespace edgemon {

// M(e): vertices closing a triangle with e, sorted. Throws InputError if e is not an edge.
VertexSet monitors(const Graph& g, Edge e);

// |M(e) ∩ s| >= c(e) for every edge.
bool is_monitoring_set(const Instance& inst, std::span<const Vertex> s);

struct EdgeDeficit {
    Edge edge;
    Demand demand = 0;
    int monitored = 0;
};

// Edges whose demand is not met by `s`, in edge order.
std::vector<EdgeDeficit> monitoring_deficits(const Instance& inst, std::span<const Vertex> s);

inline Demand max_demand(const Instance& inst) { return inst.max_demand(); }

struct DominationProfile {
    bool dominating = false;
    bool total = false;
    bool double_dominating = false;

    bool operator==(const DominationProfile&) const = default;
};

DominationProfile domination_predicates(const Graph& g, std::span<const Vertex> s);

// c(e) <= |M(e)| for all edges. Equivalent to V being a monitoring set.
bool feasibility_precheck(const Instance& inst);

// Throws InputError unless every member of `s` is a vertex of g.
void require_vertex_subset(const Graph& g, std::span<const Vertex> s);

}  // namespace edgemon
