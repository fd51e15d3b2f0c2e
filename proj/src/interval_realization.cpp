#include "edgemon/interval_realization.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "edgemon/errors.hpp"

namespace edgemon {

IntervalRealization::IntervalRealization(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t v = 0; v < intervals_.size(); ++v) {
        if (intervals_[v].left >= intervals_[v].right) {
            throw InputError("interval of vertex " + std::to_string(v) + " must satisfy a < b");
        }
    }
}

bool IntervalRealization::has_distinct_endpoints() const {
    std::vector<std::int64_t> points;
    points.reserve(2 * intervals_.size());
    for (const auto& iv : intervals_) {
        points.push_back(iv.left);
        points.push_back(iv.right);
    }
    std::sort(points.begin(), points.end());
    return std::adjacent_find(points.begin(), points.end()) == points.end();
}

bool IntervalRealization::is_unit() const {
    return std::all_of(intervals_.begin(), intervals_.end(),
                       [&](const Interval& iv) { return iv.length() == intervals_.front().length(); });
}

IntervalRealization IntervalRealization::normalized() const {
    struct Endpoint {
        std::int64_t position;
        int side;  // 0 = left, 1 = right
        Vertex vertex;
    };
    std::vector<Endpoint> points;
    for (Vertex v = 0; v < static_cast<Vertex>(intervals_.size()); ++v) {
        points.push_back({intervals_[v].left, 0, v});
        points.push_back({intervals_[v].right, 1, v});
    }
    std::sort(points.begin(), points.end(), [](const Endpoint& x, const Endpoint& y) {
        return std::tie(x.position, x.side, x.vertex) < std::tie(y.position, y.side, y.vertex);
    });
    std::vector<Interval> out(intervals_.size());
    for (std::size_t rank = 0; rank < points.size(); ++rank) {
        auto& iv = out[points[rank].vertex];
        (points[rank].side == 0 ? iv.left : iv.right) = static_cast<std::int64_t>(rank);
    }
    return IntervalRealization(std::move(out));
}

Graph IntervalRealization::intersection_graph() const {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(intervals_.size());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (intervals_[a].intersects(intervals_[b])) edges.emplace_back(a, b);
    return Graph(n, edges);
}

bool IntervalRealization::realizes(const Graph& g) const {
    return static_cast<std::size_t>(g.vertex_count()) == intervals_.size() && intersection_graph() == g;
}

std::vector<Vertex> IntervalRealization::left_order() const {
    std::vector<Vertex> order(intervals_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return intervals_[x].left < intervals_[y].left; });
    return order;
}

std::vector<Vertex> IntervalRealization::right_order() const {
    std::vector<Vertex> order(intervals_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return intervals_[x].right < intervals_[y].right; });
    return order;
}

}  // namespace edgemon
