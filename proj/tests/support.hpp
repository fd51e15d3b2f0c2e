#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "edgemon/graph.hpp"
#include "edgemon/instance.hpp"
#include "edgemon/monitoring.hpp"
#include "edgemon/oracle.hpp"
#include "edgemon/rng.hpp"

namespace edgemon::testing {

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

// Triangles {0,1,2} and {2,3,4}; 2 is the shared vertex.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

inline Graph random_graph(int n, const Weight& p, Rng& rng) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.bernoulli(p)) e.emplace_back(a, b);
    return Graph(n, e);
}

inline VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) s.push_back(v);
    return s;
}

inline VertexSet random_subset(int n, Rng& rng) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (rng.uniform(0, 1) == 1) s.push_back(v);
    return s;
}

// Exhaustive minimum over all 2^n subsets accepted by `ok`; ties go to the
// lexicographically smallest sorted vertex list.
inline Solution brute_force(int n, std::span<const Weight> w, const std::function<bool(const VertexSet&)>& ok) {
    std::optional<std::pair<Weight, VertexSet>> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s = mask_to_set(mask);
        if (!ok(s)) continue;
        Weight total(0);
        for (Vertex v : s) total += w[v];
        if (!best || total < best->first || (total == best->first && s < best->second)) best.emplace(total, std::move(s));
    }
    if (!best) return Solution::infeasible();
    return Solution::feasible(best->second, best->first);
}

// Counts triangles by direct adjacency tests, independent of monitors().
inline bool brute_monitors(const Instance& inst, const VertexSet& s) {
    const Graph& g = inst.graph();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int count = 0;
        for (Vertex x : s)
            if (x != edges[i].u && x != edges[i].v && g.adjacent(x, edges[i].u) && g.adjacent(x, edges[i].v)) ++count;
        if (count < inst.demand(i)) return false;
    }
    return true;
}

inline Solution brute_gamma_m(const Instance& inst) {
    return brute_force(inst.vertex_count(), inst.weights(), [&](const VertexSet& s) { return brute_monitors(inst, s); });
}

inline Solution brute_gamma_t(const Graph& g, std::span<const Weight> w) {
    return brute_force(g.vertex_count(), w, [&](const VertexSet& s) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            bool hit = false;
            for (Vertex x : s) hit = hit || g.adjacent(v, x);
            if (!hit) return false;
        }
        return true;
    });
}

inline Solution brute_double_dom(const Graph& g, std::span<const Weight> w) {
    return brute_force(g.vertex_count(), w, [&](const VertexSet& s) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int hits = 0;
            for (Vertex x : s) hits += (x == v || g.adjacent(v, x)) ? 1 : 0;
            if (hits < 2) return false;
        }
        return true;
    });
}

inline std::vector<Weight> random_weights(int n, Rng& rng, std::int64_t max_num = 9, std::int64_t max_den = 4) {
    std::vector<Weight> w;
    for (int i = 0; i < n; ++i) w.emplace_back(rng.uniform(1, max_num), rng.uniform(1, max_den));
    return w;
}

// Lowers every demand to at most |M(e)|, which makes the instance feasible.
inline Instance clamp_demands(const Instance& inst) {
    std::vector<Demand> c;
    const auto edges = inst.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        c.push_back(std::min<Demand>(inst.demand(i), static_cast<Demand>(monitors(inst.graph(), edges[i]).size())));
    return inst.with_demands(std::move(c));
}

}  // namespace edgemon::testing
