#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgemon/graph.hpp"

namespace edgemon {

struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;

    std::int64_t length() const noexcept { return right - left; }
    bool intersects(const Interval& other) const noexcept { return left <= other.right && other.left <= right; }
    bool operator==(const Interval&) const = default;
};

// Closed intervals [a_v, b_v], one per vertex, with a_v < b_v.
class IntervalRealization {
public:
    IntervalRealization() = default;
    explicit IntervalRealization(std::vector<Interval> intervals);

    std::size_t size() const noexcept { return intervals_.size(); }
    const Interval& interval(Vertex v) const { return intervals_.at(v); }
    std::span<const Interval> intervals() const noexcept { return intervals_; }

    bool has_distinct_endpoints() const;
    bool is_unit() const;

    // Replaces endpoints by their ranks 0..2n-1. Ties are broken left endpoints
    // first, then by vertex id, so every closed overlap (including touching
    // endpoints) survives and no new overlap appears.
    IntervalRealization normalized() const;

    Graph intersection_graph() const;
    bool realizes(const Graph& g) const;

    // Vertices sorted by left (resp. right) endpoint, ties by id.
    std::vector<Vertex> left_order() const;
    std::vector<Vertex> right_order() const;

    bool operator==(const IntervalRealization&) const = default;

private:
    std::vector<Interval> intervals_;
};

}  // namespace edgemon
