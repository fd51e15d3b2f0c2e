#include <doctest.h>

#include "edgemon/complete_solvers.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/generators.hpp"
#include "edgemon/monitoring.hpp"
#include "edgemon/reductions.hpp"
#include "support.hpp"

using namespace edgemon;
using namespace edgemon::testing;

namespace {

CompleteInstance k4_single_demand(Demand c) {
    const Graph k4 = Graph::complete(4);
    std::vector<Demand> demand(k4.edge_count(), 0);
    demand[0] = c;
    return CompleteInstance(Instance(k4, demand, unit_weights(4)));
}

CompleteInstance weighted_k4() {
    return CompleteInstance(Instance(Graph::complete(4), std::vector<Demand>(6, 1),
                                     {Weight(1), Weight(1), Weight(1), Weight(10)}));
}

Instance random_complete(Rng& rng, int n_low, int n_high, Demand c_high) {
    const int n = static_cast<int>(rng.uniform(n_low, n_high));
    const Demand c = static_cast<Demand>(rng.uniform(0, c_high));
    return gen_complete(n, DemandSpec::range(0, c), WeightSpec::random(9, 4), rng.next());
}

}  // namespace

TEST_CASE("CompleteInstance rejects other graphs") {
    CHECK_THROWS_AS(CompleteInstance(Instance::uniform(path_graph(3), 1)), InputError);
    CHECK_NOTHROW(CompleteInstance(Instance::uniform(Graph::complete(1), 0)));
}

TEST_CASE("gamma_bounds examples") {
    CHECK(gamma_bounds(CompleteInstance(Instance::uniform(Graph::complete(5), 3))) == GammaBounds{3, 5});
    CHECK(gamma_bounds(CompleteInstance(Instance::uniform(Graph::complete(4), 0))) == GammaBounds{0, 2});
    CHECK(gamma_bounds(k4_single_demand(2)) == GammaBounds{2, 4});
    CHECK_THROWS_AS(gamma_bounds(CompleteInstance(Instance::uniform(Graph::complete(3), 2))), ContractViolation);
}

TEST_CASE("solve_complete_cbounded examples") {
    const Solution k5 = solve_complete_cbounded(CompleteInstance(Instance::uniform(Graph::complete(5), 3)));
    CHECK(k5.value() == Weight(5));
    const Solution empty = solve_complete_cbounded(CompleteInstance(Instance::uniform(Graph::complete(4), 0)));
    CHECK(empty.value() == Weight(0));
    CHECK(empty.set().empty());
    const Solution forced = solve_complete_cbounded(weighted_k4(), 3);
    CHECK(forced.value() == Weight(12));
    CHECK(forced.set() == VertexSet{0, 1, 3});
    CHECK_FALSE(solve_complete_cbounded(CompleteInstance(Instance::uniform(Graph::complete(3), 2))).is_feasible());
}

TEST_CASE("solve_complete_uniform examples") {
    const Solution k3 = solve_complete_uniform(CompleteInstance(Instance::uniform(Graph::complete(3), 1)));
    CHECK(k3.value() == Weight(3));
    CHECK(k3.set() == VertexSet{0, 1, 2});
    const Solution light = solve_complete_uniform(weighted_k4());
    CHECK(light.value() == Weight(3));
    CHECK(light.set() == VertexSet{0, 1, 2});
    CHECK(light == exact_gamma_m(weighted_k4().instance()));
    CHECK_FALSE(solve_complete_uniform(CompleteInstance(Instance::uniform(Graph::complete(3), 2))).is_feasible());
    CHECK_THROWS_AS(solve_complete_uniform(k4_single_demand(2)), ContractViolation);
    CHECK_THROWS_AS(solve_complete_uniform(CompleteInstance(Instance::uniform(Graph::complete(4), 0))),
                    ContractViolation);
    CHECK(solve_complete_uniform(weighted_k4(), 3).value() == Weight(12));
}

TEST_CASE("fpt_monitoring_complete examples") {
    const CompleteInstance path_image = reduce_is_to_em(path_graph(3), 2);
    CHECK(path_image.instance().demand(0, 1) == 1);
    CHECK(path_image.instance().demand(1, 2) == 1);
    CHECK(path_image.instance().demand(0, 2) == 0);
    CHECK(fpt_monitoring_complete(path_image, 2));
    CHECK(exact_gamma_m(path_image.instance()).value() == Weight(2));
    CHECK(exact_gamma_m(path_image.instance()).set() == VertexSet{0, 2});

    const CompleteInstance k5(Instance::uniform(Graph::complete(5), 3));
    CHECK_FALSE(fpt_monitoring_complete(k5, 4));
    CHECK(fpt_monitoring_complete(k5, 5));
    CHECK(fpt_monitoring_complete(CompleteInstance(Instance::uniform(Graph::complete(4), 0)), 0));
    CHECK_FALSE(fpt_monitoring_complete(k5, -1));
}

TEST_CASE("ptas_complete examples") {
    CHECK(ptas_parameter(Weight(1)) == 2);
    CHECK(ptas_parameter(Weight(1, 2)) == 4);
    CHECK(ptas_parameter(Weight(3, 4)) == 3);
    CHECK_THROWS_AS(ptas_parameter(Weight(0)), InputError);

    CHECK(ptas_complete(CompleteInstance(Instance::uniform(Graph::complete(4), 1)), Weight(1)).value() == Weight(3));
    CHECK_FALSE(ptas_complete(CompleteInstance(Instance::uniform(Graph::complete(3), 2)), Weight(1)).is_feasible());

    const CompleteInstance k10(gen_complete(10, DemandSpec::constant(5), WeightSpec::random(9, 4), 11));
    const Solution approx = ptas_complete(k10, Weight(1, 2));
    const Solution exact = exact_gamma_m(k10.instance());
    REQUIRE(approx.is_feasible());
    CHECK(approx.value() <= Weight(3, 2) * exact.value());
    CHECK(is_monitoring_set(k10.instance(), approx.set()));
    // The 7 lightest vertices always form a candidate.
    auto w = std::vector<Weight>(k10.instance().weights().begin(), k10.instance().weights().end());
    std::sort(w.begin(), w.end());
    Weight first(0);
    for (int i = 0; i < 7; ++i) first += w[i];
    CHECK(approx.value() <= first);
}

TEST_CASE("property: any C+2 vertices monitor a complete instance") {
    Rng rng(41);
    for (int round = 0; round < 100; ++round) {
        const Instance inst = random_complete(rng, 2, 12, 4);
        const Demand c = inst.max_demand();
        if (inst.vertex_count() < c + 2) continue;
        VertexSet all;
        for (int v = 0; v < inst.vertex_count(); ++v) all.push_back(v);
        rng.shuffle(all);
        all.resize(static_cast<std::size_t>(c + 2));
        CHECK(is_monitoring_set(inst, make_set(all)));
    }
}

TEST_CASE("property: uniform rule matches the oracle, no smaller set exists") {
    for (int n = 3; n <= 8; ++n)
        for (Demand k = 1; k + 2 <= n; ++k) {
            const CompleteInstance inst(gen_complete(n, DemandSpec::constant(k), WeightSpec::random(7, 3), n * 10 + k));
            const Solution s = solve_complete_uniform(inst);
            CHECK(s.set().size() == static_cast<std::size_t>(k + 2));
            CHECK(same_optimum(s, exact_gamma_m(inst.instance())));
            const Instance unit = Instance::uniform(Graph::complete(n), k);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const VertexSet sub = mask_to_set(mask);
                if (sub.size() < static_cast<std::size_t>(k + 2)) CHECK_FALSE(is_monitoring_set(unit, sub));
            }
        }
}

TEST_CASE("property: fpt decision matches the oracle") {
    Rng rng(5);
    for (int round = 0; round < 60; ++round) {
        const CompleteInstance inst(random_complete(rng, 1, 10, 4));
        const Solution opt = exact_gamma_m(inst.instance().with_weights(unit_weights(inst.vertex_count())));
        for (int k = 0; k <= 6; ++k)
            CHECK(fpt_monitoring_complete(inst, k) == (opt.is_feasible() && opt.value() <= Weight(k)));
    }
}

TEST_CASE("property: cbounded enumeration equals the oracle, forced variant included") {
    Rng rng(17);
    for (int round = 0; round < 60; ++round) {
        const CompleteInstance inst(random_complete(rng, 1, 9, 3));
        CHECK(same_optimum(solve_complete_cbounded(inst), exact_gamma_m(inst.instance())));
        const Vertex u = static_cast<Vertex>(rng.uniform(0, inst.vertex_count() - 1));
        const Solution forced = solve_complete_cbounded(inst, u);
        const Solution brute = brute_force(inst.vertex_count(), inst.instance().weights(), [&](const VertexSet& s) {
            return set_contains(s, u) && brute_monitors(inst.instance(), s);
        });
        CHECK(same_optimum(forced, brute));
        if (forced.is_feasible()) CHECK(set_contains(forced.set(), u));
    }
}

TEST_CASE("property: ptas ratio and feasibility") {
    Rng rng(29);
    for (int round = 0; round < 40; ++round) {
        const CompleteInstance inst(random_complete(rng, 2, 11, 6));
        const Solution exact = exact_gamma_m(inst.instance());
        for (const Weight eps : {Weight(1), Weight(1, 2), Weight(1, 4)}) {
            const Solution approx = ptas_complete(inst, eps);
            REQUIRE(approx.is_feasible() == exact.is_feasible());
            if (!exact.is_feasible()) continue;
            CHECK(approx.value() <= (Weight(1) + eps) * exact.value());
            CHECK(is_monitoring_set(inst.instance(), approx.set()));
        }
    }
}
