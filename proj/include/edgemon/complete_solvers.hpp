#pragma once

#include <optional>

#include "edgemon/instance.hpp"
#include "edgemon/oracle.hpp"

namespace edgemon {

// An instance whose graph is complete.
class CompleteInstance {
public:
    // Throws InputError if the graph is not complete.
    explicit CompleteInstance(Instance inst);

    const Instance& instance() const noexcept { return inst_; }
    int vertex_count() const noexcept { return inst_.vertex_count(); }
    Demand max_demand() const noexcept { return inst_.max_demand(); }

private:
    Instance inst_;
};

struct GammaBounds {
    Demand lower = 0;
    Demand upper = 0;
    bool operator==(const GammaBounds&) const = default;
};

// (C, C+2). Requires |V| >= C+2 (ContractViolation otherwise) and certifies
// that the C+2 first vertices monitor the instance.
GammaBounds gamma_bounds(const CompleteInstance& inst);

// Minimum-weight monitoring set among all subsets of size <= C+2, scanned by
// ascending size then lexicographically; the first optimum wins. With `force`,
// only sets containing that vertex are considered.
Solution solve_complete_cbounded(const CompleteInstance& inst, std::optional<Vertex> force = std::nullopt);

// k-uniform demands with k > 0: the k+2 lightest vertices (ties by id), or
// infeasible when |V| < k+2. With `force`, the forced vertex plus the k+1
// lightest others. Throws ContractViolation on non-uniform or zero demand.
Solution solve_complete_uniform(const CompleteInstance& inst, std::optional<Vertex> force = std::nullopt);

// Decides gamma_m <= k by recursion on k and independent-set queries on the
// graph of (k-1)-demand edges between vertices not touching a k-demand edge.
bool fpt_monitoring_complete(const CompleteInstance& inst, int k,
                             const SearchBudget& budget = SearchBudget{64, std::nullopt});

// (1+epsilon)-approximation. Exact when C <= ceil(2/epsilon); otherwise the best
// set of size C..C+2 with at most ceil(2/epsilon) vertices outside the C+2 lightest.
Solution ptas_complete(const CompleteInstance& inst, const Weight& epsilon);

// ceil(2/epsilon), shared by both approximation schemes.
int ptas_parameter(const Weight& epsilon);

}  // namespace edgemon
