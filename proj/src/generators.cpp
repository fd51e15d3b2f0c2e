#include "edgemon/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgemon/errors.hpp"

namespace edgemon {

Instance decorate(Graph g, const DemandSpec& demand, const WeightSpec& weight, Rng& rng) {
    if (demand.low < 0 || demand.high < demand.low) throw InputError("bad demand range");
    std::vector<Weight> w;
    w.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (weight.unit) {
            w.emplace_back(1);
        } else {
            if (weight.max_denominator < 1 || weight.min_numerator < 0 || weight.max_numerator < weight.min_numerator) {
                throw InputError("bad weight range");
            }
            const auto num = rng.uniform(weight.min_numerator, weight.max_numerator);
            const auto den = rng.uniform(1, weight.max_denominator);
            w.emplace_back(num, den);
        }
    }
    std::vector<Demand> c;
    c.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        c.push_back(demand.low == demand.high ? demand.low : static_cast<Demand>(rng.uniform(demand.low, demand.high)));
    }
    return Instance(std::move(g), std::move(c), std::move(w));
}

Instance gen_complete(int n, const DemandSpec& demand, const WeightSpec& weight, std::uint64_t seed) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    Rng rng(seed);
    return decorate(Graph::complete(n), demand, weight, rng);
}

Instance gen_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed, const DemandSpec& demand,
                         const WeightSpec& weight) {
    if (block_sizes.empty()) throw InputError("block graph needs at least one block");
    Rng rng(seed);
    std::vector<Edge> edges;
    int n = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        const int size = block_sizes[b];
        if (size < 2) throw InputError("block sizes must be >= 2");
        std::vector<Vertex> members;
        if (b == 0) {
            for (int i = 0; i < size; ++i) members.push_back(n++);
        } else {
            members.push_back(static_cast<Vertex>(rng.uniform(0, n - 1)));
            for (int i = 1; i < size; ++i) members.push_back(n++);
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
    }
    return decorate(Graph(n, edges), demand, weight, rng);
}

IntervalSample gen_interval(int n, const LengthSpec& length, std::uint64_t seed, const DemandSpec& demand,
                            const WeightSpec& weight) {
    if (n < 1) throw InputError("interval graph needs n >= 1");
    if (length.max_length < 1) throw InputError("interval length must be positive");
    Rng rng(seed);
    std::vector<Interval> intervals(static_cast<std::size_t>(n));
    if (length.unit) {
        // Even left ends, odd common length: all 2n endpoints are distinct.
        std::vector<std::int64_t> slots(static_cast<std::size_t>(2 * n));
        std::iota(slots.begin(), slots.end(), 0);
        rng.shuffle(slots);
        const std::int64_t len = 2 * static_cast<std::int64_t>(length.max_length) + 1;
        for (int v = 0; v < n; ++v) intervals[v] = {2 * slots[v], 2 * slots[v] + len};
    } else {
        for (int v = 0; v < n; ++v) {
            const auto left = rng.uniform(0, 2 * static_cast<std::int64_t>(n) - 1);
            intervals[v] = {left, left + rng.uniform(1, length.max_length)};
        }
    }
    IntervalRealization real(std::move(intervals));
    if (!length.unit) real = real.normalized();
    Instance inst = decorate(real.intersection_graph(), demand, weight, rng);
    return {std::move(inst), std::move(real)};
}

namespace {

Cotree random_cotree(std::span<const Vertex> vertices, Cotree::Kind kind, Rng& rng) {
    if (vertices.size() == 1) return Cotree::leaf(vertices.front());
    const auto size = static_cast<std::int64_t>(vertices.size());
    const auto parts = rng.uniform(2, std::min<std::int64_t>(3, size));
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(size - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    rng.shuffle(cuts);
    cuts.resize(static_cast<std::size_t>(parts - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(size);
    const auto other = kind == Cotree::Kind::join ? Cotree::Kind::disjoint_union : Cotree::Kind::join;
    std::vector<Cotree> children;
    std::int64_t begin = 0;
    for (std::int64_t end : cuts) {
        children.push_back(random_cotree(vertices.subspan(begin, end - begin), other, rng));
        begin = end;
    }
    return Cotree::combine(kind, std::move(children));
}

}  // namespace

CographSample gen_cograph(int n, std::uint64_t seed, const WeightSpec& weight, const DemandSpec& demand) {
    if (n < 1) throw InputError("cograph needs n >= 1");
    Rng rng(seed);
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    const auto root_kind = rng.uniform(0, 1) == 0 ? Cotree::Kind::join : Cotree::Kind::disjoint_union;
    Cotree tree = random_cotree(ids, root_kind, rng);
    Instance inst = decorate(tree.realize(), demand, weight, rng);
    return {std::move(inst), std::move(tree)};
}

SplitSample gen_split(int clique_size, int independent_size, const Weight& edge_probability, std::uint64_t seed,
                      bool min_degree_two, const DemandSpec& demand, const WeightSpec& weight, int max_attempts) {
    if (clique_size < 1 || independent_size < 0) throw InputError("split graph needs a nonempty clique side");
    if (edge_probability < 0 || edge_probability > 1) throw InputError("edge probability must lie in [0,1]");
    Rng rng(seed);
    const int n = clique_size + independent_size;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex a = 0; a < clique_size; ++a)
            for (Vertex b = a + 1; b < clique_size; ++b) edges.emplace_back(a, b);
        for (Vertex s = clique_size; s < n; ++s)
            for (Vertex k = 0; k < clique_size; ++k)
                if (rng.bernoulli(edge_probability)) edges.emplace_back(k, s);
        Graph g(n, edges);
        if (min_degree_two && g.min_degree() < 2) continue;
        SplitSample out{decorate(std::move(g), demand, weight, rng), {}, {}};
        for (Vertex v = 0; v < n; ++v) (v < clique_size ? out.clique : out.independent).push_back(v);
        return out;
    }
    throw InputError("no split graph with minimum degree >= 2 after " + std::to_string(max_attempts) + " attempts");
}

Instance gen_planar(int rows, int cols, bool triangulate, std::uint64_t seed, const DemandSpec& demand,
                    const WeightSpec& weight) {
    if (rows < 1 || cols < 1) throw InputError("grid needs rows, cols >= 1");
    Rng rng(seed);
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
            if (triangulate && r + 1 < rows && c + 1 < cols) {
                if (rng.uniform(0, 1) == 0) {
                    edges.emplace_back(id(r, c), id(r + 1, c + 1));
                } else {
                    edges.emplace_back(id(r, c + 1), id(r + 1, c));
                }
            }
        }
    }
    return decorate(Graph(rows * cols, edges), demand, weight, rng);
}

bool unit_disk_adjacent(const LatticePoint& a, const LatticePoint& b, std::int64_t scale) {
    const __int128 dx = a.x - b.x;
    const __int128 dy = a.y - b.y;
    const __int128 reach = 2 * static_cast<__int128>(scale);
    return dx * dx + dy * dy <= reach * reach;
}

Graph unit_disk_graph(const std::vector<LatticePoint>& points, std::int64_t scale) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(points.size());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (unit_disk_adjacent(points[a], points[b], scale)) edges.emplace_back(a, b);
    return Graph(n, edges);
}

UnitDiskSample gen_unit_disk(int n, int box_size, std::uint64_t seed, const DemandSpec& demand,
                             const WeightSpec& weight) {
    if (n < 1 || box_size < 1) throw InputError("unit disk generator needs n >= 1 and a positive box");
    Rng rng(seed);
    std::vector<LatticePoint> points;
    const std::int64_t extent = static_cast<std::int64_t>(box_size) * kLatticeScale;
    for (int v = 0; v < n; ++v) {
        const auto x = rng.uniform(0, extent);
        const auto y = rng.uniform(0, extent);
        points.push_back({x, y});
    }
    Instance inst = decorate(unit_disk_graph(points), demand, weight, rng);
    return {std::move(inst), std::move(points)};
}

}  // namespace edgemon
