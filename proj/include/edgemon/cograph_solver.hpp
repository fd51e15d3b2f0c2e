#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgemon/cotree.hpp"
#include "edgemon/instance.hpp"

namespace edgemon {

// Cotree by the complement-connectivity recursion; nullopt when g is not a cograph.
std::optional<Cotree> cotree_build(const Graph& g);

// Bottom-up values for one cotree node. gamma_m assumes 1-uniform demands.
struct NodeSummary {
    Solution gamma_m = Solution::infeasible();
    Solution gamma_t = Solution::infeasible();
    Weight w_min;
    Vertex w_min_vertex = -1;  // lightest vertex below the node, ties by id
    bool has_isolated = true;
    int size = 0;
};

// One summary per cotree node (indexed like Cotree::nodes()). Nodes with more
// than two children are folded left to right.
std::vector<NodeSummary> cotree_summaries(const Cotree& t, std::span<const Weight> w);

// Minimum-weight total dominating set of the cograph realized by t.
Solution gamma_t_cograph(const Cotree& t, std::span<const Weight> w);

// 1-uniform weighted edge monitoring. Throws ContractViolation on other demands
// and InputError when t does not realize the instance graph.
Solution solve_cograph(const Instance& inst, const Cotree& t);

}  // namespace edgemon
