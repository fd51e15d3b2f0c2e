#include <doctest.h>

#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"
#include "support.hpp"

using namespace edgemon;
using namespace edgemon::testing;

TEST_CASE("weights parse and print in lowest terms") {
    CHECK(format_weight(Weight(6, 4)) == "3/2");
    CHECK(format_weight(Weight(4, 2)) == "2");
    CHECK(format_weight(Weight(0)) == "0");
    CHECK(parse_weight("10/4") == Weight(5, 2));
    CHECK(parse_weight("7") == Weight(7));
    CHECK_THROWS_AS(parse_weight("1/0"), InputError);
    CHECK_THROWS_AS(parse_weight("x"), InputError);
}

TEST_CASE("graph construction rejects loops, parallel edges and bad ids") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
    const Graph g(3, {{2, 0}, {1, 0}});
    CHECK(g.edges()[0] == Edge(0, 1));
    CHECK(g.edges()[1] == Edge(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("graph helpers") {
    const Graph c4 = cycle_graph(4);
    CHECK(c4.complement() == Graph(4, {{0, 2}, {1, 3}}));
    CHECK(c4.components().size() == 1);
    CHECK(c4.complement().components().size() == 2);
    CHECK(Graph::complete(4).is_complete());
    CHECK(c4.closed_neighborhood(VertexSet{0}) == VertexSet{0, 1, 3});
    CHECK(c4.induced(VertexSet{0, 1, 2}) == path_graph(3));
}

TEST_CASE("instance validation") {
    const Graph k3 = Graph::complete(3);
    CHECK_THROWS_AS(Instance(k3, {1, 1}, unit_weights(3)), InputError);
    CHECK_THROWS_AS(Instance(k3, {1, 1, -1}, unit_weights(3)), InputError);
    CHECK_THROWS_AS(Instance(k3, {1, 1, 1}, {Weight(1), Weight(-1), Weight(1)}), InputError);
    const Instance inst(k3, {0, 2, 5}, unit_weights(3));
    CHECK(inst.demand(0, 2) == 2);
    CHECK(inst.demand(2, 1) == 5);
    CHECK_FALSE(inst.uniform_demand().has_value());
}

TEST_CASE("monitors returns the common neighbours") {
    CHECK(monitors(Graph::complete(4), {0, 1}) == VertexSet{2, 3});
    CHECK(monitors(path_graph(3), {0, 1}).empty());
    CHECK(monitors(bowtie(), {0, 1}) == VertexSet{2});
    CHECK_THROWS_AS(monitors(path_graph(3), {0, 2}), InputError);
}

TEST_CASE("is_monitoring_set examples") {
    const Instance k3 = Instance::uniform(Graph::complete(3), 1);
    CHECK(is_monitoring_set(k3, VertexSet{0, 1, 2}));
    CHECK_FALSE(is_monitoring_set(k3, VertexSet{0, 1}));
    CHECK(is_monitoring_set(Instance::uniform(bowtie(), 0), VertexSet{}));
    CHECK_THROWS_AS(is_monitoring_set(k3, VertexSet{3}), InputError);
}

TEST_CASE("max_demand examples") {
    CHECK(max_demand(Instance::uniform(Graph::complete(4), 1)) == 1);
    CHECK(max_demand(Instance::uniform(Graph::edgeless(3), 1)) == 0);
    CHECK(max_demand(Instance(Graph::complete(3), {0, 2, 5}, unit_weights(3))) == 5);
}

TEST_CASE("domination predicates") {
    const Graph k2 = Graph::complete(2);
    CHECK(domination_predicates(k2, VertexSet{0, 1}) == DominationProfile{true, true, true});
    CHECK(domination_predicates(k2, VertexSet{0}) == DominationProfile{true, false, false});

    // C4 with two opposite vertices: 0 has neighbours 1 and 3, neither chosen,
    // and N[0] ∩ S = {0}. So the set dominates but is neither total nor double.
    const Graph c4 = cycle_graph(4);
    const VertexSet s{0, 2};
    bool total = true, twice = true;
    for (Vertex v = 0; v < 4; ++v) {
        int open = 0, closed = 0;
        for (Vertex x : s) {
            open += c4.adjacent(v, x) ? 1 : 0;
            closed += (x == v || c4.adjacent(v, x)) ? 1 : 0;
        }
        total = total && open >= 1;
        twice = twice && closed >= 2;
    }
    CHECK(domination_predicates(c4, s) == DominationProfile{true, total, twice});
    CHECK(domination_predicates(c4, s) == DominationProfile{true, false, false});
    CHECK(domination_predicates(c4, VertexSet{0, 1}) == DominationProfile{true, true, false});
}

TEST_CASE("feasibility precheck examples") {
    CHECK_FALSE(feasibility_precheck(Instance::uniform(path_graph(3), 1)));
    CHECK(feasibility_precheck(Instance::uniform(Graph::complete(5), 3)));
    CHECK(feasibility_precheck(Instance::uniform(path_graph(5), 0)));
}

TEST_CASE("deficits list unmet edges") {
    const Instance k4 = Instance::uniform(Graph::complete(4), 2);
    const auto d = monitoring_deficits(k4, VertexSet{0, 1, 2});
    // Edges inside {0,1,2} have one chosen monitor; edges to 3 have two.
    REQUIRE(d.size() == 3);
    CHECK(d[0].edge == Edge(0, 1));
    CHECK(d[0].monitored == 1);
    CHECK(d[0].demand == 2);
}

TEST_CASE("property: monitoring is monotone under supersets") {
    Rng rng(101);
    for (int round = 0; round < 200; ++round) {
        const int n = static_cast<int>(rng.uniform(3, 9));
        const Graph g = random_graph(n, Weight(1, 2), rng);
        std::vector<Demand> demand;
        for (std::size_t i = 0; i < g.edge_count(); ++i) demand.push_back(static_cast<Demand>(rng.uniform(0, 2)));
        const Instance inst(g, demand, unit_weights(n));
        const VertexSet s = random_subset(n, rng);
        const VertexSet bigger = set_union(s, random_subset(n, rng));
        if (is_monitoring_set(inst, s)) CHECK(is_monitoring_set(inst, bigger));
        CHECK(is_monitoring_set(inst, s) == brute_monitors(inst, s));
    }
}

TEST_CASE("property: precheck is equivalent to V monitoring") {
    Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        const int n = static_cast<int>(rng.uniform(2, 8));
        const Graph g = random_graph(n, Weight(3, 5), rng);
        std::vector<Demand> demand;
        for (std::size_t i = 0; i < g.edge_count(); ++i) demand.push_back(static_cast<Demand>(rng.uniform(0, 3)));
        const Instance inst(g, demand, unit_weights(n));
        VertexSet all;
        for (int v = 0; v < n; ++v) all.push_back(v);
        CHECK(feasibility_precheck(inst) == is_monitoring_set(inst, all));
    }
}

TEST_CASE("property: 1-uniform monitoring sets totally dominate") {
    Rng rng(23);
    int checked = 0;
    for (int round = 0; round < 400; ++round) {
        const int n = static_cast<int>(rng.uniform(3, 8));
        const Graph g = random_graph(n, Weight(2, 3), rng);
        if (g.min_degree() == 0) continue;
        const Instance inst = Instance::uniform(g, 1);
        const VertexSet s = random_subset(n, rng);
        if (!is_monitoring_set(inst, s)) continue;
        ++checked;
        CHECK(domination_predicates(g, s).total);
    }
    CHECK(checked > 20);
}

TEST_CASE("property: monitors never contain the edge endpoints") {
    Rng rng(5);
    for (int round = 0; round < 50; ++round) {
        const Graph g = random_graph(8, Weight(1, 2), rng);
        for (const Edge& e : g.edges()) {
            const auto m = monitors(g, e);
            CHECK_FALSE(set_contains(m, e.u));
            CHECK_FALSE(set_contains(m, e.v));
        }
    }
}

TEST_CASE("solution accessors") {
    const Solution s = Solution::feasible({2, 0}, Weight(3));
    CHECK(s.set() == VertexSet{0, 2});
    CHECK(same_optimum(s, Solution::feasible({1}, Weight(3))));
    CHECK_FALSE(same_optimum(s, Solution::infeasible()));
    CHECK_THROWS(Solution::infeasible().value());
}
