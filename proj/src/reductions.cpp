#include "edgemon/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"

namespace edgemon {

namespace {

void require_no_isolated(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw InputError("vertex " + std::to_string(v) + " is isolated");
    }
}

}  // namespace

Instance reduce_tds_to_em(const Graph& g) {
    require_no_isolated(g);
    const int n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const Vertex x = n, y = n + 1, z = n + 2;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, x);
    edges.emplace_back(x, y);
    edges.emplace_back(x, z);
    edges.emplace_back(y, z);
    return Instance::uniform(Graph(n + 3, edges), 1);
}

CompleteInstance reduce_is_to_em(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    if (!g.is_connected()) throw InputError("independent-set reduction needs a connected graph");
    const Graph kn = Graph::complete(g.vertex_count());
    std::vector<Demand> demand;
    for (const Edge& e : kn.edges()) demand.push_back(g.adjacent(e.u, e.v) ? k - 1 : 0);
    return CompleteInstance(Instance(kn, std::move(demand), unit_weights(g.vertex_count())));
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Instance reduce_bip_tds_to_comparability(const Graph& g) {
    if (!is_bipartite(g)) throw InputError("graph is not bipartite");
    require_no_isolated(g);
    const int n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
    return Instance::uniform(Graph(n + 1, edges), 1);
}

namespace {

struct PointD {
    double x, y;
};

LatticePoint round_point(PointD p) { return {std::llround(p.x), std::llround(p.y)}; }

// Point at arc length s along the polyline.
PointD along(const std::vector<PointD>& line, const std::vector<double>& cumulative, double s) {
    for (std::size_t i = 1; i < line.size(); ++i) {
        if (s <= cumulative[i] || i + 1 == line.size()) {
            const double seg = cumulative[i] - cumulative[i - 1];
            const double t = seg > 0 ? (s - cumulative[i - 1]) / seg : 0.0;
            return {line[i - 1].x + t * (line[i].x - line[i - 1].x), line[i - 1].y + t * (line[i].y - line[i - 1].y)};
        }
    }
    return line.back();
}

void place_gadget(const EdgeGadget& gadget, const std::vector<LatticePoint>& bends, std::vector<LatticePoint>& coords) {
    std::vector<PointD> line;
    auto push = [&](const LatticePoint& p) { line.push_back({static_cast<double>(p.x), static_cast<double>(p.y)}); };
    push(coords[gadget.source.u]);
    for (const auto& p : bends) push(p);
    push(coords[gadget.source.v]);
    std::vector<double> cumulative{0.0};
    for (std::size_t i = 1; i < line.size(); ++i) {
        cumulative.push_back(cumulative.back() + std::hypot(line[i].x - line[i - 1].x, line[i].y - line[i - 1].y));
    }
    const int gaps = static_cast<int>(gadget.a.size()) - 1;
    std::vector<PointD> a_pos;
    for (int j = 0; j <= gaps; ++j) a_pos.push_back(along(line, cumulative, cumulative.back() * j / gaps));
    for (int j = 1; j < gaps; ++j) coords[gadget.a[j]] = round_point(a_pos[j]);
    // b and b' sit on either side of the midpoint between consecutive a's.
    for (int j = 0; j < gaps; ++j) {
        const PointD p = a_pos[j], q = a_pos[j + 1];
        const PointD mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
        const PointD normal{-(q.y - p.y) * 0.375, (q.x - p.x) * 0.375};
        coords[gadget.b[j]] = round_point({mid.x + normal.x, mid.y + normal.y});
        coords[gadget.b_prime[j]] = round_point({mid.x - normal.x, mid.y - normal.y});
    }
}

}  // namespace

UdgReduction reduce_planar_vc_to_udg(const Graph& g, const std::vector<int>& chain_lengths,
                                     const std::optional<UdgEmbedding>& embedding) {
    if (g.vertex_count() > 0 && g.max_degree() > 3) throw InputError("source graph has a vertex of degree > 3");
    if (chain_lengths.size() != g.edge_count()) throw InputError("need one chain length per edge");
    for (int len : chain_lengths) {
        if (len < 1) throw InputError("chain lengths must be at least 1");
    }

    UdgReduction out;
    Vertex next = g.vertex_count();
    std::vector<Edge> edges;
    const auto source = g.edges();
    for (std::size_t i = 0; i < source.size(); ++i) {
        const int len = chain_lengths[i];
        EdgeGadget gadget;
        gadget.source = source[i];
        gadget.chain_length = len;
        gadget.a.push_back(source[i].u);
        for (int j = 0; j <= 2 * len; ++j) {
            gadget.b.push_back(next++);
            gadget.b_prime.push_back(next++);
            gadget.a.push_back(j < 2 * len ? next++ : source[i].v);
        }
        for (int j = 0; j <= 2 * len; ++j) {
            const Vertex b = gadget.b[j], bp = gadget.b_prime[j];
            edges.emplace_back(b, bp);
            edges.emplace_back(b, gadget.a[j]);
            edges.emplace_back(bp, gadget.a[j]);
            edges.emplace_back(b, gadget.a[j + 1]);
            edges.emplace_back(bp, gadget.a[j + 1]);
        }
        out.offset += 5 * len + 2;
        out.gadgets.push_back(std::move(gadget));
    }
    Graph result(next, edges);

    if (embedding) {
        if (embedding->positions.size() != static_cast<std::size_t>(g.vertex_count())) {
            throw InputError("embedding needs one position per source vertex");
        }
        if (!embedding->bends.empty() && embedding->bends.size() != g.edge_count()) {
            throw InputError("embedding bends need one list per source edge");
        }
        std::vector<LatticePoint> coords(static_cast<std::size_t>(next));
        std::copy(embedding->positions.begin(), embedding->positions.end(), coords.begin());
        for (std::size_t i = 0; i < out.gadgets.size(); ++i) {
            place_gadget(out.gadgets[i], embedding->bends.empty() ? std::vector<LatticePoint>{} : embedding->bends[i], coords);
        }
        if (!(unit_disk_graph(coords) == result)) {
            throw InputError("embedding does not give a unit-disk realization of the gadget graph");
        }
        out.coordinates = std::move(coords);
    }
    out.instance = Instance::uniform(std::move(result), 1);
    return out;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g.degree(order[i])) >= i) m = i + 1;
    }
    std::int64_t head = 0, tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += static_cast<std::int64_t>(g.degree(order[i]));
    if (head != static_cast<std::int64_t>(m) * (m - 1) + tail) return std::nullopt;
    SplitPartition p;
    p.clique = make_set(std::vector<Vertex>(order.begin(), order.begin() + m));
    p.independent = make_set(std::vector<Vertex>(order.begin() + m, order.end()));
    ensure(g.is_clique(p.clique) && g.is_independent(p.independent), "degree test accepted a non-split partition");
    return p;
}

Solution split_gamma_m(const Graph& g, const SplitPartition& partition, const SearchBudget& budget) {
    const int n = g.vertex_count();
    if (partition.clique.size() + partition.independent.size() != static_cast<std::size_t>(n) ||
        !set_intersection(partition.clique, partition.independent).empty()) {
        throw InputError("split partition does not cover the vertex set");
    }
    if (!g.is_clique(partition.clique) || !g.is_independent(partition.independent)) {
        throw InputError("split partition is not a clique plus an independent set");
    }
    if (partition.clique.size() < 3) throw InputError("split solver needs |K| >= 3; use the oracle");
    if (n > 0 && g.min_degree() < 2) throw InputError("split solver needs minimum degree >= 2; use the oracle");

    CoverProblem problem;
    problem.vertex_count = n;
    problem.weight = unit_weights(n);
    problem.allowed = partition.clique;
    for (Vertex v = 0; v < n; ++v) problem.constraints.push_back({g.closed_neighborhood(VertexSet{v}), 2});
    problem.constraints.push_back({partition.clique, 3});
    Solution s = solve_cover(problem, budget);
    if (s.is_feasible()) {
        ensure(is_monitoring_set(Instance::uniform(g, 1), s.set()), "split optimum does not monitor the graph");
    }
    return s;
}

Solution split_gamma_m(const Graph& g, const SearchBudget& budget) {
    const auto p = split_partition(g);
    if (!p) throw InputError("graph is not a split graph");
    return split_gamma_m(g, *p, budget);
}

}  // namespace edgemon
