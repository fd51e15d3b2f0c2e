#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgemon/instance.hpp"
#include "edgemon/oracle.hpp"

namespace edgemon {

// BFS layers from `root`; level is -1 for vertices outside root's component.
struct Layering {
    Vertex root = -1;
    std::vector<VertexSet> layers;
    std::vector<int> level;

    int depth() const noexcept { return static_cast<int>(layers.size()) - 1; }  // l
};

Layering bfs_layering(const Graph& g, Vertex root);

// Minimum-weight S ⊆ region monitoring every edge with an endpoint in `band`
// (other demands treated as 0). Throws ResourceError when |region| exceeds the budget.
Solution solve_band(const Instance& inst, std::span<const Vertex> band, std::span<const Vertex> region,
                    const SearchBudget& budget = SearchBudget::monitoring());

struct OffsetResult {
    int offset = 0;
    Weight value;
    VertexSet set;
};

struct ComponentReport {
    Vertex root = -1;
    int depth = 0;
    std::vector<OffsetResult> offsets;
    int chosen_offset = 0;
};

struct PlanarPtasReport {
    int k = 0;
    bool precheck_passed = false;
    std::vector<ComponentReport> components;
};

// Layered (k+2)/k-approximation with k = ceil(2/epsilon). Planarity is trusted.
Solution ptas_planar(const Instance& inst, const Weight& epsilon, const SearchBudget& budget = SearchBudget::monitoring(),
                     PlanarPtasReport* report = nullptr);

// m <= 3n - 6 (for n >= 3); a cheap necessary condition for planarity.
bool passes_euler_bound(const Graph& g);

}  // namespace edgemon
