#include "edgemon/instance.hpp"

#include <algorithm>
#include <string>

#include "edgemon/errors.hpp"

namespace edgemon {

Instance::Instance(Graph graph, std::vector<Demand> demand, std::vector<Weight> weight)
    : graph_(std::move(graph)), demand_(std::move(demand)), weight_(std::move(weight)) {
    if (demand_.size() != graph_.edge_count()) throw InputError("demand table does not match the edge set");
    if (weight_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
        throw InputError("weight table does not match the vertex set");
    }
    for (Demand c : demand_)
        if (c < 0) throw InputError("negative edge demand");
    for (const Weight& w : weight_)
        if (w < 0) throw InputError("negative vertex weight");
}

Instance Instance::uniform(Graph graph, Demand c) {
    std::vector<Demand> demand(graph.edge_count(), c);
    std::vector<Weight> weight(static_cast<std::size_t>(graph.vertex_count()), Weight(1));
    return Instance(std::move(graph), std::move(demand), std::move(weight));
}

Demand Instance::demand(Vertex a, Vertex b) const {
    auto idx = graph_.edge_index(a, b);
    if (!idx) throw InputError("{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
    return demand_[*idx];
}

Weight Instance::weight_of(std::span<const Vertex> vertices) const {
    Weight total(0);
    for (Vertex v : vertices) total += weight_.at(v);
    return total;
}

Demand Instance::max_demand() const noexcept {
    Demand best = 0;
    for (Demand c : demand_) best = std::max(best, c);
    return best;
}

std::optional<Demand> Instance::uniform_demand() const noexcept {
    if (demand_.empty()) return std::nullopt;
    const Demand first = demand_.front();
    for (Demand c : demand_)
        if (c != first) return std::nullopt;
    return first;
}

Instance Instance::with_weights(std::vector<Weight> weight) const { return Instance(graph_, demand_, std::move(weight)); }

Instance Instance::with_demands(std::vector<Demand> demand) const { return Instance(graph_, std::move(demand), weight_); }

Solution Solution::feasible(VertexSet set, Weight value) {
    Solution s;
    s.status_ = Status::feasible;
    s.set_ = make_set(std::move(set));
    s.value_ = value;
    return s;
}

const Weight& Solution::value() const {
    if (!is_feasible()) throw InvariantError("value() of an infeasible solution");
    return value_;
}

bool same_optimum(const Solution& a, const Solution& b) {
    if (a.status() != b.status()) return false;
    return !a.is_feasible() || a.value() == b.value();
}

}  // namespace edgemon
