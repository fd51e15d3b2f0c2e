#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgemon/instance.hpp"
#include "edgemon/interval_realization.hpp"

namespace edgemon {

struct PathEvent {
    enum class Kind { introduce, forget };
    Kind kind = Kind::introduce;
    Vertex vertex = -1;
    bool operator==(const PathEvent&) const = default;
};

// Bags B_0..B_l and the event turning B_{i-1} into B_i (events[i-1]).
struct NicePathDecomposition {
    std::vector<PathEvent> events;
    std::vector<VertexSet> bags;

    int length() const noexcept { return static_cast<int>(events.size()); }
    std::size_t width() const;  // largest bag size
};

// Sweeps the 2n endpoints left to right. Realizations with repeated endpoints
// are first replaced by their normalized() form.
NicePathDecomposition nice_path_decomposition(const IntervalRealization& real);

// Human-readable list of violated decomposition properties; empty when valid.
std::vector<std::string> decomposition_violations(const NicePathDecomposition& d, const Graph& g,
                                                  const IntervalRealization& real);

// Graph, normalized realization and decomposition, with the per-step sets the
// dynamic program needs.
class IntervalModel {
public:
    // Throws InputError unless `real` realizes `g`.
    IntervalModel(Graph g, const IntervalRealization& real);

    const Graph& graph() const noexcept { return graph_; }
    const IntervalRealization& realization() const noexcept { return real_; }
    const NicePathDecomposition& decomposition() const noexcept { return decomp_; }
    int length() const noexcept { return decomp_.length(); }

    const VertexSet& bag(int step) const { return decomp_.bags.at(step); }
    VertexSet bag_neighborhood(int step) const;  // N[B_i]
    bool processed(Vertex v, int step) const;    // v in V_i
    VertexSet processed_set(int step) const;

    // The `c`+2 members of s ∩ N[B_i] with the largest right endpoints, or all of
    // them when there are at most c+2. Throws InputError unless s ⊆ V_i.
    VertexSet representant(std::span<const Vertex> s, int step, Demand c) const;

private:
    Graph graph_;
    IntervalRealization real_;
    NicePathDecomposition decomp_;
    std::vector<int> introduced_at_;  // step index introducing each vertex
};

struct IntervalTrace {
    std::vector<std::size_t> table_sizes;     // |F_i| for i = 0..l
    std::vector<std::uint64_t> state_bounds;  // sum_{j <= C+2} binom(x_i, j), x_i = |N[B_i] ∩ V_i|
};

// Exact weighted edge monitoring on interval graphs by the representant DP.
// The witness is rebuilt from per-step predecessor records.
Solution solve_interval(const Instance& inst, const IntervalRealization& real, IntervalTrace* trace = nullptr);

// |N[clique]| <= 3 * omega(G) for a unit realization. Throws ContractViolation
// when the realization is not unit or `clique` is not a clique.
bool unit_interval_bound_check(const IntervalRealization& real, std::span<const Vertex> clique);

}  // namespace edgemon
