#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgemon/graph.hpp"
#include "edgemon/weight.hpp"

namespace edgemon {

using Demand = int;

// Graph plus per-edge demand c(e) and per-vertex weight w(v).
class Instance {
public:
    Instance() = default;

    // `demand` is aligned with graph.edges(); `weight` with the vertex ids.
    Instance(Graph graph, std::vector<Demand> demand, std::vector<Weight> weight);

    // Every edge gets demand `c`; all weights are 1.
    static Instance uniform(Graph graph, Demand c);

    const Graph& graph() const noexcept { return graph_; }
    int vertex_count() const noexcept { return graph_.vertex_count(); }

    Demand demand(std::size_t edge_index) const { return demand_.at(edge_index); }
    // Throws InputError if {a,b} is not an edge.
    Demand demand(Vertex a, Vertex b) const;
    std::span<const Demand> demands() const noexcept { return demand_; }

    const Weight& weight(Vertex v) const { return weight_.at(v); }
    std::span<const Weight> weights() const noexcept { return weight_; }

    Weight weight_of(std::span<const Vertex> vertices) const;

    // C = max demand, 0 without edges.
    Demand max_demand() const noexcept;
    // k when every edge has demand k; nullopt on mixed demands or no edges.
    std::optional<Demand> uniform_demand() const noexcept;

    Instance with_weights(std::vector<Weight> weight) const;
    Instance with_demands(std::vector<Demand> demand) const;

    bool operator==(const Instance&) const = default;

private:
    Graph graph_;
    std::vector<Demand> demand_;
    std::vector<Weight> weight_;
};

// Result of a minimisation. Infeasible stands for an optimum of +infinity.
class Solution {
public:
    enum class Status { feasible, infeasible };

    static Solution infeasible() { return Solution(); }
    static Solution feasible(VertexSet set, Weight value);

    Status status() const noexcept { return status_; }
    bool is_feasible() const noexcept { return status_ == Status::feasible; }
    const VertexSet& set() const noexcept { return set_; }
    // Throws InvariantError when infeasible.
    const Weight& value() const;

    bool operator==(const Solution&) const = default;

private:
    Solution() = default;

    Status status_ = Status::infeasible;
    VertexSet set_;
    Weight value_{0};
};

// Same status and, when feasible, same value. Witness sets may differ.
bool same_optimum(const Solution& a, const Solution& b);

}  // namespace edgemon
