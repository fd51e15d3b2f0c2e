#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgemon/instance.hpp"

namespace edgemon {

// Limits for the exponential searches below.
struct SearchBudget {
    int max_vertices = 20;
    std::optional<std::uint64_t> node_limit;

    static SearchBudget monitoring() { return {20, std::nullopt}; }
    static SearchBudget domination() { return {24, std::nullopt}; }
};

// Weighted multicover: minimise w(S) subject to |S ∩ candidates_j| >= need_j
// for every constraint j, with S drawn from `allowed` (all vertices when empty).
// Every oracle in this module, the split solver and the planar band solver
// are instances of this problem.
struct CoverConstraint {
    VertexSet candidates;
    int need = 0;
};

struct CoverProblem {
    int vertex_count = 0;
    std::vector<Weight> weight;
    std::vector<CoverConstraint> constraints;
    std::optional<VertexSet> allowed;
};

// Branch and bound. Branches on the constraint with the largest residual need,
// bounds by the cheapest completion of the most demanding constraint.
// The returned witness is the lexicographically smallest optimal set.
// Throws ResourceError when vertex_count > budget.max_vertices (or > 64) or the node limit is hit.
Solution solve_cover(const CoverProblem& problem, const SearchBudget& budget);
// Optimum only; skips the witness canonicalisation passes.
std::optional<Weight> cover_optimum(const CoverProblem& problem, const SearchBudget& budget);

Solution exact_gamma_m(const Instance& inst, const SearchBudget& budget = SearchBudget::monitoring());
std::optional<Weight> exact_gamma_m_value(const Instance& inst,
                                          const SearchBudget& budget = SearchBudget::monitoring());

Solution exact_gamma_t(const Graph& g, std::span<const Weight> w,
                       const SearchBudget& budget = SearchBudget::domination());
Solution exact_double_dom(const Graph& g, std::span<const Weight> w,
                          const SearchBudget& budget = SearchBudget::domination());

// Lexicographically smallest independent set of size exactly k, if alpha(G) >= k.
std::optional<VertexSet> exists_independent_set(const Graph& g, int k,
                                                const SearchBudget& budget = SearchBudget::domination());
int independence_number(const Graph& g, const SearchBudget& budget = SearchBudget::domination());

// Minimum-cardinality vertex cover (complement of a maximum independent set); value = size.
Solution exact_vertex_cover(const Graph& g, const SearchBudget& budget = SearchBudget::domination());

std::vector<Weight> unit_weights(int vertex_count);

}  // namespace edgemon
