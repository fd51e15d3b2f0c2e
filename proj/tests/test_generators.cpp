#include <doctest.h>

#include "edgemon/block_solver.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/generators.hpp"
#include "edgemon/monitoring.hpp"
#include "support.hpp"

using namespace edgemon;
using namespace edgemon::testing;

namespace {

// Exhaustive scan of 4-subsets for an induced path on four vertices.
bool has_induced_p4(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const VertexSet s{a, b, c, d};
                    const Graph h = g.induced(s);
                    if (h.edge_count() != 3 || !h.is_connected()) continue;
                    if (h.max_degree() == 2) return true;
                }
    return false;
}

int triangle_count(const Graph& g) {
    int count = 0;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b)
            for (int c = b + 1; c < g.vertex_count(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++count;
    return count;
}

}  // namespace

TEST_CASE("gen_complete") {
    const Instance k3 = gen_complete(3, DemandSpec::constant(1), WeightSpec::unit_weights(), 0);
    CHECK(k3 == Instance::uniform(Graph::complete(3), 1));
    const Instance k5 = gen_complete(5, DemandSpec::constant(3), WeightSpec::unit_weights(), 0);
    CHECK(k5 == Instance::uniform(Graph::complete(5), 3));
    const Instance a = gen_complete(6, DemandSpec::range(0, 2), WeightSpec::random(9, 4), 7);
    const Instance b = gen_complete(6, DemandSpec::range(0, 2), WeightSpec::random(9, 4), 7);
    CHECK(a == b);
    CHECK_FALSE(a == gen_complete(6, DemandSpec::range(0, 2), WeightSpec::random(9, 4), 8));
    for (std::size_t i = 0; i < a.graph().edge_count(); ++i) {
        CHECK(a.demand(i) >= 0);
        CHECK(a.demand(i) <= 2);
    }
}

TEST_CASE("gen_block_graph") {
    CHECK(gen_block_graph({2}, 0).graph() == Graph::complete(2));
    const Instance bow = gen_block_graph({3, 3}, 0);
    CHECK(bow.vertex_count() == 5);
    CHECK(bow.graph().edge_count() == 6);
    CHECK(block_cut_tree(bow.graph()).cutpoints.size() == 1);

    const Instance g = gen_block_graph({4, 3, 2}, 1);
    CHECK(g.vertex_count() == 7);
    CHECK(g.graph().is_connected());
    const auto tree = block_cut_tree(g.graph());
    CHECK(tree.is_block_graph());
    REQUIRE(tree.blocks.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& block : tree.blocks) {
        CHECK(g.graph().is_clique(block));
        sizes.push_back(block.size());
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 3, 4});
    CHECK(gen_block_graph({4, 3, 2}, 1) == g);
}

TEST_CASE("gen_interval") {
    CHECK(IntervalRealization({{0, 5}, {1, 6}, {2, 7}}).intersection_graph() == Graph::complete(3));
    CHECK(IntervalRealization({{0, 1}, {2, 3}, {4, 5}}).intersection_graph() == Graph::edgeless(3));

    const auto sample = gen_interval(10, LengthSpec{}, 3);
    CHECK(sample.realization.has_distinct_endpoints());
    const Graph& g = sample.instance.graph();
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            const Interval& x = sample.realization.interval(a);
            const Interval& y = sample.realization.interval(b);
            const bool overlap = std::max(x.left, y.left) <= std::min(x.right, y.right);
            CHECK(g.adjacent(a, b) == overlap);
        }

    const auto unit = gen_interval(12, LengthSpec::unit_length(3), 4);
    CHECK(unit.realization.is_unit());
    CHECK(unit.realization.has_distinct_endpoints());
    CHECK(unit.realization.realizes(unit.instance.graph()));
}

TEST_CASE("gen_cograph") {
    CHECK(Cotree::parse("(join (leaf 0) (leaf 1))").realize() == Graph::complete(2));
    CHECK(Cotree::parse("(union (leaf 0) (leaf 1))").realize() == Graph::edgeless(2));
    const auto sample = gen_cograph(8, 5);
    CHECK(sample.cotree.realizes(sample.instance.graph()));
    CHECK_FALSE(has_induced_p4(sample.instance.graph()));
    CHECK(has_induced_p4(path_graph(4)));

    // Labels alternate along every root-leaf path.
    for (const auto& node : sample.cotree.nodes())
        for (int child : node.children)
            if (sample.cotree.node(child).kind != Cotree::Kind::leaf) CHECK(sample.cotree.node(child).kind != node.kind);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = gen_cograph(9, seed);
        CHECK_FALSE(has_induced_p4(s.instance.graph()));
        CHECK(s.cotree.vertices().size() == 9);
    }
}

TEST_CASE("gen_split") {
    CHECK(gen_split(3, 0, Weight(1, 2), 0).instance.graph() == Graph::complete(3));
    CHECK(gen_split(1, 2, Weight(1), 0).instance.graph() == star_graph(2));
    const auto s = gen_split(4, 3, Weight(3, 5), 9, true);
    CHECK(s.instance.graph().min_degree() >= 2);
    CHECK(s.instance.graph().is_clique(s.clique));
    CHECK(s.instance.graph().is_independent(s.independent));
    CHECK_THROWS_AS(gen_split(1, 2, Weight(1), 0, true), InputError);
}

TEST_CASE("gen_planar") {
    CHECK(gen_planar(1, 2, false, 0).graph() == Graph::complete(2));
    const Graph g = gen_planar(2, 2, true, 0).graph();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(triangle_count(g) == 2);

    const Instance grid = gen_planar(4, 4, true, 3);
    CHECK(grid.graph().edge_count() == 24 + 9);
    bool bare_boundary_edge = false;
    for (const Edge& e : grid.graph().edges())
        if (monitors(grid.graph(), e).empty()) bare_boundary_edge = true;
    CHECK(feasibility_precheck(grid) == !bare_boundary_edge);
    // Interior edges sit between two cells and always close a triangle.
    for (const Edge& e : grid.graph().edges()) {
        const int ru = e.u / 4, cu = e.u % 4, rv = e.v / 4, cv = e.v % 4;
        const bool horizontal_interior = ru == rv && ru > 0 && ru < 3;
        const bool vertical_interior = cu == cv && cu > 0 && cu < 3;
        const bool diagonal = ru != rv && cu != cv;
        if (horizontal_interior || vertical_interior || diagonal) CHECK_FALSE(monitors(grid.graph(), e).empty());
    }
    CHECK(grid.graph().edge_count() <= static_cast<std::size_t>(3 * 16 - 6));
}

TEST_CASE("gen_unit_disk") {
    CHECK(unit_disk_graph({{0, 0}, {100, 0}}) == Graph::complete(2));
    CHECK(unit_disk_graph({{0, 0}, {500, 0}}) == Graph::edgeless(2));
    CHECK(unit_disk_adjacent({0, 0}, {200, 0}));
    CHECK_FALSE(unit_disk_adjacent({0, 0}, {200, 1}));
    CHECK(unit_disk_adjacent({0, 0}, {120, 160}));

    const auto sample = gen_unit_disk(12, 10, 2);
    REQUIRE(sample.coordinates.size() == 12);
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b) {
            const auto dx = sample.coordinates[a].x - sample.coordinates[b].x;
            const auto dy = sample.coordinates[a].y - sample.coordinates[b].y;
            CHECK(sample.instance.graph().adjacent(a, b) == (dx * dx + dy * dy <= 200 * 200));
        }
    for (const auto& p : sample.coordinates) {
        CHECK(p.x >= 0);
        CHECK(p.x <= 10 * kLatticeScale);
        CHECK(p.y >= 0);
        CHECK(p.y <= 10 * kLatticeScale);
    }
    CHECK(gen_unit_disk(12, 10, 2).coordinates == sample.coordinates);
}

TEST_CASE("property: generators are deterministic") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(gen_interval(9, LengthSpec{}, seed, DemandSpec::range(0, 2), WeightSpec::random(5, 3)).instance ==
              gen_interval(9, LengthSpec{}, seed, DemandSpec::range(0, 2), WeightSpec::random(5, 3)).instance);
        CHECK(gen_cograph(9, seed).cotree.to_string() == gen_cograph(9, seed).cotree.to_string());
        CHECK(gen_split(4, 4, Weight(1, 2), seed).instance == gen_split(4, 4, Weight(1, 2), seed).instance);
        CHECK(gen_planar(3, 3, true, seed) == gen_planar(3, 3, true, seed));
        CHECK(gen_block_graph({3, 2, 4}, seed) == gen_block_graph({3, 2, 4}, seed));
    }
}

TEST_CASE("property: random block graphs decompose into cliques") {
    Rng rng(12);
    for (int round = 0; round < 30; ++round) {
        std::vector<int> sizes;
        const int blocks = static_cast<int>(rng.uniform(1, 6));
        for (int i = 0; i < blocks; ++i) sizes.push_back(static_cast<int>(rng.uniform(2, 5)));
        const Instance g = gen_block_graph(sizes, rng.next());
        const auto tree = block_cut_tree(g.graph());
        CHECK(tree.is_block_graph());
        CHECK(tree.blocks.size() == sizes.size());
    }
}
