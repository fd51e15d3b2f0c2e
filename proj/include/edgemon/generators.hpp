#pragma once

#include <cstdint>
#include <vector>

#include "edgemon/cotree.hpp"
#include "edgemon/instance.hpp"
#include "edgemon/interval_realization.hpp"
#include "edgemon/rng.hpp"

namespace edgemon {

// Demands drawn uniformly from [low, high] per edge (constant when equal).
struct DemandSpec {
    Demand low = 1;
    Demand high = 1;

    static DemandSpec constant(Demand c) { return {c, c}; }
    static DemandSpec range(Demand low, Demand high) { return {low, high}; }
};

// Unit weights, or num/den with num in [min_numerator, max_numerator] and den in [1, max_denominator].
struct WeightSpec {
    bool unit = true;
    std::int64_t min_numerator = 1;
    std::int64_t max_numerator = 1;
    std::int64_t max_denominator = 1;

    static WeightSpec unit_weights() { return {}; }
    static WeightSpec random(std::int64_t max_numerator, std::int64_t max_denominator, std::int64_t min_numerator = 1) {
        return {false, min_numerator, max_numerator, max_denominator};
    }
};

// Draws weights (vertex order) then demands (edge order) from `rng`.
Instance decorate(Graph g, const DemandSpec& demand, const WeightSpec& weight, Rng& rng);

Instance gen_complete(int n, const DemandSpec& demand, const WeightSpec& weight, std::uint64_t seed);

// First clique on 0..s0-1; each further clique shares one uniformly chosen existing vertex.
Instance gen_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed,
                         const DemandSpec& demand = DemandSpec::constant(1),
                         const WeightSpec& weight = WeightSpec::unit_weights());

struct LengthSpec {
    bool unit = false;
    // General intervals: left end in [0, 2n), length in [1, max_length].
    // Unit intervals: every interval has length 2 * max_length + 1.
    int max_length = 4;

    static LengthSpec unit_length(int half_length) { return {true, half_length}; }
};

struct IntervalSample {
    Instance instance;
    IntervalRealization realization;
};

// Endpoints are 2n pairwise-distinct integers.
IntervalSample gen_interval(int n, const LengthSpec& length, std::uint64_t seed,
                            const DemandSpec& demand = DemandSpec::constant(1),
                            const WeightSpec& weight = WeightSpec::unit_weights());

struct CographSample {
    Instance instance;
    Cotree cotree;
};

// Random cotree with alternating union/join labels along every root-leaf path.
CographSample gen_cograph(int n, std::uint64_t seed, const WeightSpec& weight = WeightSpec::unit_weights(),
                          const DemandSpec& demand = DemandSpec::constant(1));

struct SplitSample {
    Instance instance;
    VertexSet clique;
    VertexSet independent;
};

// Clique on 0..k-1, independent set on k..k+i-1, cross edges with probability p.
// With `min_degree_two`, resamples until delta(G) >= 2 and throws InputError after
// `max_attempts` failures.
SplitSample gen_split(int clique_size, int independent_size, const Weight& edge_probability, std::uint64_t seed,
                      bool min_degree_two = false, const DemandSpec& demand = DemandSpec::constant(1),
                      const WeightSpec& weight = WeightSpec::unit_weights(), int max_attempts = 1000);

// rows x cols grid, vertex r*cols+c. When triangulated, each cell gets one
// diagonal whose direction is drawn from the seed.
Instance gen_planar(int rows, int cols, bool triangulate, std::uint64_t seed,
                    const DemandSpec& demand = DemandSpec::constant(1),
                    const WeightSpec& weight = WeightSpec::unit_weights());

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const LatticePoint&) const = default;
};

// Coordinates live on an integer lattice with this many points per unit length.
inline constexpr std::int64_t kLatticeScale = 100;

// Adjacent iff Euclidean distance <= 2 units, decided exactly on squared lattice distances.
bool unit_disk_adjacent(const LatticePoint& a, const LatticePoint& b, std::int64_t scale = kLatticeScale);
Graph unit_disk_graph(const std::vector<LatticePoint>& points, std::int64_t scale = kLatticeScale);

struct UnitDiskSample {
    Instance instance;
    std::vector<LatticePoint> coordinates;
};

UnitDiskSample gen_unit_disk(int n, int box_size, std::uint64_t seed,
                             const DemandSpec& demand = DemandSpec::constant(1),
                             const WeightSpec& weight = WeightSpec::unit_weights());

}  // namespace edgemon
