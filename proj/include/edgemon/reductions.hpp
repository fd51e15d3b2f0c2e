#pragma once

#include <optional>
#include <vector>

#include "edgemon/complete_solvers.hpp"
#include "edgemon/generators.hpp"
#include "edgemon/instance.hpp"
#include "edgemon/oracle.hpp"

namespace edgemon {

// G plus a triangle {x, y, z} with x adjacent to every vertex of G; c = 1, unit weights.
// New vertices are n, n+1, n+2 (x = n). Optimum: gamma_t(G) + 3.
Instance reduce_tds_to_em(const Graph& g);

// Complete graph on V with c(e) = k-1 on edges of g and 0 elsewhere.
// gamma_m <= k exactly when g has an independent set of size k. Requires g connected, k >= 1.
CompleteInstance reduce_is_to_em(const Graph& g, int k);

// Bipartite g plus a universal vertex n; c = 1, unit weights. Optimum: gamma_t(G) + 1.
Instance reduce_bip_tds_to_comparability(const Graph& g);

bool is_bipartite(const Graph& g);

// Vertex ids of the chain replacing one source edge.
struct EdgeGadget {
    Edge source;
    int chain_length = 1;        // n_i
    std::vector<Vertex> a;       // a_0 = u, a_1 .. a_{2n}, a_{2n+1} = v
    std::vector<Vertex> b;       // b_0 .. b_{2n}
    std::vector<Vertex> b_prime; // b'_0 .. b'_{2n}
};

// Lattice positions of the source vertices and optional interior bend points per edge.
struct UdgEmbedding {
    std::vector<LatticePoint> positions;
    std::vector<std::vector<LatticePoint>> bends;  // empty, or one list per source edge
};

struct UdgReduction {
    Instance instance;
    std::vector<EdgeGadget> gadgets;
    std::optional<std::vector<LatticePoint>> coordinates;
    int offset = 0;  // sum of 5 n_i + 2; optimum = vc(G) + offset
};

// Replaces every edge by a chain of triangles. Source vertices keep their ids;
// gadget vertices follow in edge order. Requires max degree <= 3 and n_i >= 1.
// With an embedding, gadget vertices are spread along each edge's polyline and
// the result must equal the unit-disk graph of the coordinates (InputError otherwise).
UdgReduction reduce_planar_vc_to_udg(const Graph& g, const std::vector<int>& chain_lengths,
                                     const std::optional<UdgEmbedding>& embedding = std::nullopt);

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

// Degree-sequence test; the clique side is as large as possible. nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

// 1-uniform unit-weight optimum on split graphs with min degree >= 2 and |K| >= 3:
// the smallest double dominating set inside K with at least three vertices.
// Throws InputError when the conditions fail.
Solution split_gamma_m(const Graph& g, const SplitPartition& partition,
                       const SearchBudget& budget = SearchBudget::domination());
Solution split_gamma_m(const Graph& g, const SearchBudget& budget = SearchBudget::domination());

}  // namespace edgemon
