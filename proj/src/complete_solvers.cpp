#include "edgemon/complete_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"

namespace edgemon {

CompleteInstance::CompleteInstance(Instance inst) : inst_(std::move(inst)) {
    if (!inst_.graph().is_complete()) throw InputError("instance graph is not complete");
}

namespace {

// In K_n an edge {u,v} is monitored by every chosen vertex other than u and v.
class CompleteChecker {
public:
    explicit CompleteChecker(const Instance& inst) : inst_(inst), in_(static_cast<std::size_t>(inst.vertex_count()), 0) {}

    bool monitors(std::span<const Vertex> s) {
        for (Vertex v : s) in_[v] = 1;
        bool ok = true;
        const auto edges = inst_.graph().edges();
        const auto size = static_cast<int>(s.size());
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            ok = size - in_[edges[i].u] - in_[edges[i].v] >= inst_.demand(i);
        }
        for (Vertex v : s) in_[v] = 0;
        return ok;
    }

private:
    const Instance& inst_;
    std::vector<int> in_;
};

// Calls visit(combination) for every k-subset of `pool` in lexicographic order.
template <typename Visit>
void for_each_combination(std::span<const Vertex> pool, int k, Visit&& visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> combo(static_cast<std::size_t>(k));
    for (;;) {
        for (int i = 0; i < k; ++i) combo[i] = pool[idx[i]];
        visit(std::span<const Vertex>(combo));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> by_weight(const Instance& inst) {
    std::vector<Vertex> order(static_cast<std::size_t>(inst.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inst.weight(a) < inst.weight(b); });
    return order;
}

void check_force(const Instance& inst, std::optional<Vertex> force) {
    if (force && !inst.graph().contains(*force)) throw InputError("forced vertex is not in the graph");
}

}  // namespace

GammaBounds gamma_bounds(const CompleteInstance& ci) {
    const Demand c = ci.max_demand();
    if (ci.vertex_count() < c + 2) {
        throw ContractViolation("gamma bounds need |V| >= C+2 (|V| = " + std::to_string(ci.vertex_count()) +
                                ", C = " + std::to_string(c) + ")");
    }
    VertexSet first(static_cast<std::size_t>(c + 2));
    std::iota(first.begin(), first.end(), 0);
    ensure(CompleteChecker(ci.instance()).monitors(first), "a (C+2)-set failed to monitor a complete instance");
    return {c, c + 2};
}

Solution solve_complete_cbounded(const CompleteInstance& ci, std::optional<Vertex> force) {
    const Instance& inst = ci.instance();
    check_force(inst, force);
    const int n = inst.vertex_count();
    const int limit = std::min(n, ci.max_demand() + 2);
    CompleteChecker checker(inst);

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (!force || v != *force) pool.push_back(v);

    std::optional<VertexSet> best;
    Weight best_weight(0);
    const int base = force ? 1 : 0;
    for (int size = base; size <= limit; ++size) {
        for_each_combination(pool, size - base, [&](std::span<const Vertex> rest) {
            VertexSet s(rest.begin(), rest.end());
            if (force) s.insert(std::upper_bound(s.begin(), s.end(), *force), *force);
            const Weight w = inst.weight_of(s);
            if (best && w >= best_weight) return;
            if (!checker.monitors(s)) return;
            best = std::move(s);
            best_weight = w;
        });
    }
    if (!best) return Solution::infeasible();
    return Solution::feasible(std::move(*best), best_weight);
}

Solution solve_complete_uniform(const CompleteInstance& ci, std::optional<Vertex> force) {
    const Instance& inst = ci.instance();
    check_force(inst, force);
    const auto k = inst.uniform_demand();
    if (!k || *k <= 0) throw ContractViolation("uniform solver needs k-uniform demands with k > 0");
    const int n = inst.vertex_count();
    if (n < *k + 2) return Solution::infeasible();

    VertexSet chosen;
    if (force) chosen.push_back(*force);
    for (Vertex v : by_weight(inst)) {
        if (static_cast<int>(chosen.size()) == *k + 2) break;
        if (!force || v != *force) chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    const Weight value = inst.weight_of(chosen);
    return Solution::feasible(std::move(chosen), value);
}

bool fpt_monitoring_complete(const CompleteInstance& ci, int k, const SearchBudget& budget) {
    const Instance& inst = ci.instance();
    const Demand c = ci.max_demand();
    if (k < 0 || c > k) return false;
    if (k == 0) return true;  // C == 0: the empty set monitors.
    if (fpt_monitoring_complete(ci, k - 1, budget)) return true;

    const Graph& g = inst.graph();
    const auto edges = g.edges();
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inst.demand(i) == k) removed[edges[i].u] = removed[edges[i].v] = 1;
    }
    VertexSet kept;
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!removed[v]) {
            local[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    }
    std::vector<Edge> star_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (inst.demand(i) == k - 1 && local[e.u] >= 0 && local[e.v] >= 0) star_edges.emplace_back(local[e.u], local[e.v]);
    }
    return exists_independent_set(Graph(static_cast<int>(kept.size()), star_edges), k, budget).has_value();
}

int ptas_parameter(const Weight& epsilon) {
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    const Weight ratio = Weight(2) / epsilon;
    std::int64_t k = ratio.numerator() / ratio.denominator();
    if (Weight(k) < ratio) ++k;
    return static_cast<int>(std::max<std::int64_t>(k, 1));
}

Solution ptas_complete(const CompleteInstance& ci, const Weight& epsilon) {
    const int k = ptas_parameter(epsilon);
    const Instance& inst = ci.instance();
    const Demand c = ci.max_demand();
    const int n = inst.vertex_count();

    if (c <= k) {
        // Every optimum has at most C+2 <= k+2 vertices; the C-bounded scan is exhaustive here.
        return solve_complete_cbounded(ci);
    }
    if (n < c + 2) return Solution::infeasible();

    const auto order = by_weight(inst);
    const std::vector<Vertex> first(order.begin(), order.begin() + (c + 2));
    VertexSet outside(order.begin() + (c + 2), order.end());
    std::sort(outside.begin(), outside.end());
    VertexSet first_sorted = first;
    std::sort(first_sorted.begin(), first_sorted.end());

    CompleteChecker checker(inst);
    std::optional<VertexSet> best;
    Weight best_weight(0);
    const int max_outside = std::min<int>(k, static_cast<int>(outside.size()));
    for (int j = 0; j <= max_outside; ++j) {
        for_each_combination(outside, j, [&](std::span<const Vertex> extra) {
            const Weight extra_weight = inst.weight_of(extra);
            const int low = std::max(0, c - j);
            const int high = c + 2 - j;
            for (int i = low; i <= high; ++i) {
                for_each_combination(first_sorted, i, [&](std::span<const Vertex> inner) {
                    const Weight w = extra_weight + inst.weight_of(inner);
                    if (best && w >= best_weight) return;
                    VertexSet s = set_union(inner, extra);
                    if (!checker.monitors(s)) return;
                    best = std::move(s);
                    best_weight = w;
                });
            }
        });
    }
    ensure(best.has_value(), "the C+2 lightest vertices must monitor a complete instance");
    return Solution::feasible(std::move(*best), best_weight);
}

}  // namespace edgemon
