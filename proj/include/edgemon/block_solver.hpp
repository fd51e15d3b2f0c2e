#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edgemon/instance.hpp"

namespace edgemon {

// Biconnected components and articulation points. Block i is adjacent to
// cutpoint c in the tree exactly when c belongs to blocks[i].
struct BlockCutTree {
    std::vector<VertexSet> blocks;       // sorted vertex sets, sorted lexicographically
    std::vector<char> block_is_clique;   // aligned with blocks
    VertexSet cutpoints;
    std::vector<std::vector<int>> vertex_blocks;  // per vertex, indices of the blocks containing it

    bool is_block_graph() const;
    // Index of the block holding edge {a, b}; throws InputError if {a, b} is not an edge.
    int block_of_edge(const Graph& g, Vertex a, Vertex b) const;
};

// Iterative Hopcroft-Tarjan. Isolated vertices form singleton blocks.
// Non-clique blocks are flagged, never rejected.
BlockCutTree block_cut_tree(const Graph& g);

enum class LeafOrder { smallest_block, largest_block, seeded };

struct BlockSolverOptions {
    // Leaf blocks with k-uniform demand (k > 0) use the sorted-weight rule.
    bool uniform_fast_path = false;
    LeafOrder order = LeafOrder::smallest_block;
    std::uint64_t seed = 0;  // used by LeafOrder::seeded
    // Rejects instances with C above this bound (ContractViolation).
    std::optional<Demand> demand_bound;
};

// One leaf elimination, kept for inspection and witness replay.
struct LeafStep {
    int block = -1;
    Vertex cut = -1;
    Weight unforced;
    Weight forced;
    VertexSet unforced_set;
    VertexSet forced_set;
};

struct BlockSolveTrace {
    std::vector<LeafStep> steps;
    std::vector<int> final_blocks;  // blocks solved without a remaining cut vertex
};

// Exact weighted edge monitoring on block graphs by repeated leaf-block elimination.
// Throws InputError if some block is not a clique.
Solution solve_block(const Instance& inst, const BlockSolverOptions& options = {}, BlockSolveTrace* trace = nullptr);

}  // namespace edgemon
