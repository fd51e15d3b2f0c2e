#include "edgemon/planar_ptas.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "edgemon/complete_solvers.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"

namespace edgemon {

Layering bfs_layering(const Graph& g, Vertex root) {
    if (!g.contains(root)) throw InputError("root is not a vertex");
    Layering out;
    out.root = root;
    out.level.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    out.level[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (out.level[w] < 0) {
                out.level[w] = out.level[v] + 1;
                q.push(w);
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int lv = out.level[v];
        if (lv < 0) continue;
        if (static_cast<std::size_t>(lv) >= out.layers.size()) out.layers.resize(static_cast<std::size_t>(lv) + 1);
        out.layers[lv].push_back(v);
    }
    return out;
}

Solution solve_band(const Instance& inst, std::span<const Vertex> band, std::span<const Vertex> region,
                    const SearchBudget& budget) {
    const Graph& g = inst.graph();
    require_vertex_subset(g, band);
    require_vertex_subset(g, region);
    const VertexSet r(region.begin(), region.end());
    const VertexSet b(band.begin(), band.end());
    if (!std::is_sorted(r.begin(), r.end()) || !std::is_sorted(b.begin(), b.end())) throw InputError("band and region must be sorted");
    if (!std::includes(r.begin(), r.end(), b.begin(), b.end())) throw InputError("band is not inside its region");

    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < r.size(); ++i) local[r[i]] = static_cast<int>(i);

    CoverProblem problem;
    problem.vertex_count = static_cast<int>(r.size());
    for (Vertex v : r) problem.weight.push_back(inst.weight(v));
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const Demand need = inst.demand(i);
        if (need == 0 || !(set_contains(b, e.u) || set_contains(b, e.v))) continue;
        CoverConstraint c;
        c.need = need;
        for (Vertex m : monitors(g, e)) {
            if (local[m] >= 0) c.candidates.push_back(local[m]);
        }
        problem.constraints.push_back(std::move(c));
    }
    if (problem.constraints.empty()) return Solution::feasible({}, Weight(0));
    if (problem.vertex_count > budget.max_vertices) {
        throw ResourceError("band region has " + std::to_string(problem.vertex_count) + " vertices (band " +
                            std::to_string(b.size()) + "), budget is " + std::to_string(budget.max_vertices));
    }
    const Solution s = solve_cover(problem, budget);
    if (!s.is_feasible()) return s;
    VertexSet global;
    for (Vertex v : s.set()) global.push_back(r[v]);
    return Solution::feasible(std::move(global), s.value());
}

namespace {

VertexSet layer_union(const Layering& lay, int from, int to) {
    VertexSet out;
    for (int t = std::max(from, 0); t <= std::min(to, lay.depth()); ++t) {
        out.insert(out.end(), lay.layers[t].begin(), lay.layers[t].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Solution ptas_planar(const Instance& inst, const Weight& epsilon, const SearchBudget& budget, PlanarPtasReport* report) {
    const int k = ptas_parameter(epsilon);
    PlanarPtasReport local_report;
    local_report.k = k;
    local_report.precheck_passed = feasibility_precheck(inst);
    if (!local_report.precheck_passed) {
        if (report) *report = std::move(local_report);
        return Solution::infeasible();
    }

    const Graph& g = inst.graph();
    VertexSet chosen;
    for (const VertexSet& component : g.components()) {
        const Layering lay = bfs_layering(g, component.front());
        const int l = lay.depth();
        ComponentReport comp{component.front(), l, {}, 0};
        for (int i = 0; i < k; ++i) {
            VertexSet s_i;
            std::vector<int> covered(static_cast<std::size_t>(l) + 1, 0);
            for (int j = -1; j <= ceil_div(l, k); ++j) {
                const int t = i + k * j;
                for (int layer = std::max(t, 0); layer <= std::min(t + k - 1, l); ++layer) ++covered[layer];
                const VertexSet band = layer_union(lay, t, t + k - 1);
                if (band.empty()) continue;
                const VertexSet region = layer_union(lay, t - 1, t + k);
                const Solution part = solve_band(inst, band, region, budget);
                ensure(part.is_feasible(), "band subproblem infeasible after a passing precheck");
                s_i = set_union(s_i, part.set());
            }
            ensure(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }),
                   "bands of one offset do not partition the layers");
            comp.offsets.push_back({i, inst.weight_of(s_i), std::move(s_i)});
        }
        for (int i = 1; i < k; ++i) {
            if (comp.offsets[i].value < comp.offsets[comp.chosen_offset].value) comp.chosen_offset = i;
        }
        chosen = set_union(chosen, comp.offsets[comp.chosen_offset].set);
        local_report.components.push_back(std::move(comp));
    }
    ensure(is_monitoring_set(inst, chosen), "layered solution does not monitor the instance");
    if (report) *report = std::move(local_report);
    const Weight value = inst.weight_of(chosen);
    return Solution::feasible(std::move(chosen), value);
}

bool passes_euler_bound(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (n < 3) return true;
    return g.edge_count() <= 3 * n - 6;
}

}  // namespace edgemon
