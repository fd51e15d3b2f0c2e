#include <doctest.h>

#include "edgemon/cograph_solver.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/generators.hpp"
#include "edgemon/monitoring.hpp"
#include "support.hpp"

using namespace edgemon;
using namespace edgemon::testing;

namespace {

bool totally_dominates(const Graph& g, const VertexSet& within, const VertexSet& s) {
    for (Vertex v : within) {
        bool hit = false;
        for (Vertex x : s) hit = hit || g.adjacent(v, x);
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cotree_build examples") {
    CHECK_FALSE(cotree_build(path_graph(4)).has_value());
    const auto k4 = cotree_build(Graph::complete(4));
    REQUIRE(k4.has_value());
    CHECK(k4->node(k4->root()).kind == Cotree::Kind::join);
    CHECK(k4->node(k4->root()).children.size() == 4);
    const auto c4 = cotree_build(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK(c4->to_string() == "(join (union (leaf 0) (leaf 2)) (union (leaf 1) (leaf 3)))");
    CHECK(c4->realizes(cycle_graph(4)));
    CHECK(cotree_build(Graph::edgeless(1))->to_string() == "(leaf 0)");
}

TEST_CASE("gamma_t_cograph examples") {
    const Cotree k2 = Cotree::parse("(join (leaf 0) (leaf 1))");
    CHECK(gamma_t_cograph(k2, std::vector<Weight>{Weight(3), Weight(5)}).value() == Weight(8));
    const Cotree star = Cotree::parse("(join (leaf 0) (union (leaf 1) (leaf 2)))");
    const std::vector<Weight> w{Weight(2), Weight(1), Weight(1)};
    const Solution s = gamma_t_cograph(star, w);
    CHECK(s.value() == Weight(3));
    CHECK(s.set() == VertexSet{0, 1});
    CHECK(s == brute_gamma_t(star.realize(), w));
    CHECK_FALSE(gamma_t_cograph(Cotree::leaf(0), unit_weights(1)).is_feasible());
}

TEST_CASE("solve_cograph examples") {
    const Cotree k4 = *cotree_build(Graph::complete(4));
    CHECK(solve_cograph(Instance::uniform(Graph::complete(4), 1), k4).value() == Weight(3));
    const Cotree c4 = *cotree_build(cycle_graph(4));
    CHECK_FALSE(solve_cograph(Instance::uniform(cycle_graph(4), 1), c4).is_feasible());
    const Cotree two_triangles =
        Cotree::parse("(union (join (leaf 0) (leaf 1) (leaf 2)) (join (leaf 3) (leaf 4) (leaf 5)))");
    const Instance inst = Instance::uniform(two_triangles.realize(), 1);
    const Solution s = solve_cograph(inst, two_triangles);
    CHECK(s.value() == Weight(6));
    CHECK(s == exact_gamma_m(inst));

    CHECK_THROWS_AS(solve_cograph(Instance::uniform(Graph::complete(4), 2), k4), ContractViolation);
    CHECK_THROWS_AS(solve_cograph(Instance::uniform(cycle_graph(4), 1), k4), InputError);
    CHECK(solve_cograph(Instance::uniform(Graph::edgeless(2), 1), *cotree_build(Graph::edgeless(2))).value() ==
          Weight(0));
}

TEST_CASE("summaries track isolated vertices") {
    const Cotree t = Cotree::parse("(union (leaf 0) (join (leaf 1) (leaf 2)))");
    const auto summaries = cotree_summaries(t, unit_weights(3));
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        const auto& node = t.nodes()[i];
        if (node.kind == Cotree::Kind::leaf) CHECK(summaries[i].has_isolated);
        if (node.kind == Cotree::Kind::join) CHECK_FALSE(summaries[i].has_isolated);
        CHECK(summaries[i].size == static_cast<int>(t.vertices_below(static_cast<int>(i)).size()));
    }
    CHECK(summaries[t.root()].has_isolated);
}

TEST_CASE("property: cograph solvers equal the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform(1, 12));
        const auto sample = gen_cograph(n, seed, WeightSpec::random(9, 4));
        const auto& inst = sample.instance;
        CHECK(same_optimum(solve_cograph(inst, sample.cotree), exact_gamma_m(inst)));
        CHECK(same_optimum(gamma_t_cograph(sample.cotree, inst.weights()), exact_gamma_t(inst.graph(), inst.weights())));
        const Solution s = solve_cograph(inst, sample.cotree);
        if (s.is_feasible()) {
            CHECK(is_monitoring_set(inst, s.set()));
            CHECK(inst.weight_of(s.set()) == s.value());
        }
        // A rebuilt cotree gives the same answer.
        const auto rebuilt = cotree_build(inst.graph());
        REQUIRE(rebuilt.has_value());
        CHECK(same_optimum(solve_cograph(inst, *rebuilt), s));
    }
}

TEST_CASE("property: monitoring a join through its sides") {
    Rng rng(55);
    int two_sided = 0;
    for (int round = 0; round < 40; ++round) {
        const int n1 = static_cast<int>(rng.uniform(1, 5));
        const int n2 = static_cast<int>(rng.uniform(1, 5));
        const auto left = gen_cograph(n1, rng.next());
        const auto right = gen_cograph(n2, rng.next());
        // Join with the right side shifted by n1.
        std::vector<Edge> edges(left.instance.graph().edges().begin(), left.instance.graph().edges().end());
        for (const Edge& e : right.instance.graph().edges()) edges.emplace_back(e.u + n1, e.v + n1);
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
        const Graph g(n1 + n2, edges);
        const Instance inst = Instance::uniform(g, 1);
        VertexSet v1, v2;
        for (int v = 0; v < n1; ++v) v1.push_back(v);
        for (int v = n1; v < n1 + n2; ++v) v2.push_back(v);
        for (int trial = 0; trial < 20; ++trial) {
            const VertexSet s = random_subset(n1 + n2, rng);
            const VertexSet s1 = set_intersection(s, v1), s2 = set_intersection(s, v2);
            if (totally_dominates(g, v1, s1)) {
                for (const Edge& e : g.edges())
                    if (e.u < n1 && e.v >= n1) CHECK(static_cast<int>(set_intersection(monitors(g, e), s).size()) >= 1);
            }
            if (s1.empty() || s2.empty()) continue;
            ++two_sided;
            const bool expected = totally_dominates(g, v1, s1) || totally_dominates(g, v2, s2);
            CHECK(is_monitoring_set(inst, s) == expected);
        }
    }
    CHECK(two_sided > 100);
}
