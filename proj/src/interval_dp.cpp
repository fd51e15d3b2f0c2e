#include "edgemon/interval_dp.hpp"

#include <algorithm>
#include <map>

#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"

namespace edgemon {

std::size_t NicePathDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w;
}

NicePathDecomposition nice_path_decomposition(const IntervalRealization& input) {
    const IntervalRealization real = input.has_distinct_endpoints() ? input : input.normalized();
    struct Endpoint {
        std::int64_t x;
        PathEvent event;
    };
    std::vector<Endpoint> points;
    points.reserve(2 * real.size());
    for (std::size_t v = 0; v < real.size(); ++v) {
        const auto& iv = real.interval(static_cast<Vertex>(v));
        points.push_back({iv.left, {PathEvent::Kind::introduce, static_cast<Vertex>(v)}});
        points.push_back({iv.right, {PathEvent::Kind::forget, static_cast<Vertex>(v)}});
    }
    std::sort(points.begin(), points.end(), [](const Endpoint& a, const Endpoint& b) { return a.x < b.x; });

    NicePathDecomposition d;
    d.bags.emplace_back();
    for (const auto& p : points) {
        d.events.push_back(p.event);
        VertexSet next = d.bags.back();
        if (p.event.kind == PathEvent::Kind::introduce) {
            next.insert(std::upper_bound(next.begin(), next.end(), p.event.vertex), p.event.vertex);
        } else {
            next.erase(std::lower_bound(next.begin(), next.end(), p.event.vertex));
        }
        d.bags.push_back(std::move(next));
    }
    return d;
}

std::vector<std::string> decomposition_violations(const NicePathDecomposition& d, const Graph& g,
                                                  const IntervalRealization& input) {
    const IntervalRealization real = input.has_distinct_endpoints() ? input : input.normalized();
    std::vector<std::string> out;
    const int n = g.vertex_count();
    if (d.bags.size() != d.events.size() + 1) out.push_back("bag count is not event count + 1");
    if (d.length() != 2 * n) out.push_back("length is not 2n");
    if (d.bags.empty() || !d.bags.front().empty() || !d.bags.back().empty()) out.push_back("first or last bag not empty");

    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        if (!g.is_clique(d.bags[i])) out.push_back("bag " + std::to_string(i) + " is not a clique");
    }
    for (const Edge& e : g.edges()) {
        const bool covered = std::any_of(d.bags.begin(), d.bags.end(), [&](const VertexSet& b) {
            return set_contains(b, e.u) && set_contains(b, e.v);
        });
        if (!covered) out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag");
    }
    for (Vertex v = 0; v < n; ++v) {
        int first = -1, last = -1, count = 0;
        for (std::size_t i = 0; i < d.bags.size(); ++i) {
            if (set_contains(d.bags[i], v)) {
                if (first < 0) first = static_cast<int>(i);
                last = static_cast<int>(i);
                ++count;
            }
        }
        if (count == 0 || last - first + 1 != count) out.push_back("occurrences of " + std::to_string(v) + " not a segment");
    }
    for (std::size_t i = 0; i + 1 < d.bags.size() && i < d.events.size(); ++i) {
        const auto& ev = d.events[i];
        VertexSet expect = d.bags[i];
        if (ev.kind == PathEvent::Kind::introduce) {
            expect = set_union(expect, VertexSet{ev.vertex});
            if (set_contains(d.bags[i], ev.vertex)) out.push_back("step " + std::to_string(i + 1) + " reintroduces");
        } else {
            std::erase(expect, ev.vertex);
            if (!set_contains(d.bags[i], ev.vertex)) out.push_back("step " + std::to_string(i + 1) + " forgets an absent vertex");
        }
        if (expect != d.bags[i + 1]) out.push_back("step " + std::to_string(i + 1) + " is not a single introduce/forget");
    }
    std::vector<Vertex> intro, forget;
    for (const auto& ev : d.events) (ev.kind == PathEvent::Kind::introduce ? intro : forget).push_back(ev.vertex);
    if (intro != real.left_order()) out.push_back("introductions do not follow the left-endpoint order");
    if (forget != real.right_order()) out.push_back("forgets do not follow the right-endpoint order");
    return out;
}

IntervalModel::IntervalModel(Graph g, const IntervalRealization& real)
    : graph_(std::move(g)), real_(real.has_distinct_endpoints() ? real : real.normalized()) {
    if (real.size() != static_cast<std::size_t>(graph_.vertex_count()) || !real.realizes(graph_)) {
        throw InputError("interval realization does not match the graph");
    }
    decomp_ = nice_path_decomposition(real_);
    introduced_at_.assign(real_.size(), -1);
    for (int i = 0; i < decomp_.length(); ++i) {
        const auto& ev = decomp_.events[i];
        if (ev.kind == PathEvent::Kind::introduce) introduced_at_[ev.vertex] = i + 1;
    }
}

VertexSet IntervalModel::bag_neighborhood(int step) const { return graph_.closed_neighborhood(bag(step)); }

bool IntervalModel::processed(Vertex v, int step) const { return introduced_at_.at(v) <= step; }

VertexSet IntervalModel::processed_set(int step) const {
    VertexSet out;
    for (Vertex v = 0; v < graph_.vertex_count(); ++v)
        if (processed(v, step)) out.push_back(v);
    return out;
}

VertexSet IntervalModel::representant(std::span<const Vertex> s, int step, Demand c) const {
    for (Vertex v : s) {
        if (!graph_.contains(v) || !processed(v, step)) throw InputError("representant argument is not a subset of V_i");
    }
    std::vector<Vertex> near = set_intersection(s, bag_neighborhood(step));
    const auto keep = static_cast<std::size_t>(c) + 2;
    if (near.size() > keep) {
        std::sort(near.begin(), near.end(), [&](Vertex a, Vertex b) { return real_.interval(a).right > real_.interval(b).right; });
        near.resize(keep);
        std::sort(near.begin(), near.end());
    }
    return near;
}

namespace {

std::uint64_t bounded_subset_count(std::uint64_t x, int max_size) {
    // sum_{j=0}^{max_size} binom(x, j), saturating.
    constexpr std::uint64_t cap = UINT64_MAX / 2;
    std::uint64_t total = 0, term = 1;
    for (int j = 0; j <= max_size && static_cast<std::uint64_t>(j) <= x; ++j) {
        total = std::min(cap, total + term);
        const std::uint64_t num = x - static_cast<std::uint64_t>(j);
        term = (term > cap / std::max<std::uint64_t>(num, 1)) ? cap : term * num / static_cast<std::uint64_t>(j + 1);
    }
    return total;
}

struct StateEntry {
    Weight weight;
    VertexSet previous;
    bool took = false;
};

using StateTable = std::map<VertexSet, StateEntry>;

void offer(StateTable& table, VertexSet key, const Weight& weight, const VertexSet& previous, bool took) {
    auto it = table.find(key);
    if (it == table.end()) {
        table.emplace(std::move(key), StateEntry{weight, previous, took});
    } else if (weight < it->second.weight) {
        it->second = StateEntry{weight, previous, took};
    }
}

int monitored_count(const Graph& g, Edge e, std::span<const Vertex> w) {
    int count = 0;
    for (Vertex x : w) {
        if (x != e.u && x != e.v && g.adjacent(x, e.u) && g.adjacent(x, e.v)) ++count;
    }
    return count;
}

}  // namespace

Solution solve_interval(const Instance& inst, const IntervalRealization& real, IntervalTrace* trace) {
    const IntervalModel model(inst.graph(), real);
    const Graph& g = model.graph();
    const Demand c = inst.max_demand();
    const int l = model.length();

    std::vector<StateTable> tables(static_cast<std::size_t>(l) + 1);
    tables[0].emplace(VertexSet{}, StateEntry{Weight(0), {}, false});
    IntervalTrace local_trace;
    local_trace.table_sizes.push_back(1);
    local_trace.state_bounds.push_back(1);

    for (int i = 1; i <= l; ++i) {
        const PathEvent& ev = model.decomposition().events[i - 1];
        const Vertex v = ev.vertex;
        StateTable& next = tables[i];
        for (const auto& [key, entry] : tables[i - 1]) {
            if (ev.kind == PathEvent::Kind::forget) {
                bool ok = true;
                for (Vertex u : model.bag(i)) {
                    if (!g.adjacent(u, v)) continue;
                    const Edge e(u, v);
                    if (monitored_count(g, e, key) < inst.demand(u, v)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) offer(next, model.representant(key, i, c), entry.weight, key, false);
            } else {
                offer(next, model.representant(key, i, c), entry.weight, key, false);
                offer(next, model.representant(set_union(key, VertexSet{v}), i, c), entry.weight + inst.weight(v), key, true);
            }
        }
        const auto near = set_intersection(model.bag_neighborhood(i), model.processed_set(i));
        const std::uint64_t bound = bounded_subset_count(near.size(), c + 2);
        if (next.size() > bound) throw InvariantError("state table exceeds the representant bound at step " + std::to_string(i));
        local_trace.table_sizes.push_back(next.size());
        local_trace.state_bounds.push_back(bound);
    }
    if (trace) *trace = std::move(local_trace);

    const StateTable& last = tables[static_cast<std::size_t>(l)];
    if (last.empty()) return Solution::infeasible();
    auto best = last.begin();
    for (auto it = last.begin(); it != last.end(); ++it)
        if (it->second.weight < best->second.weight) best = it;

    VertexSet chosen;
    VertexSet key = best->first;
    for (int i = l; i >= 1; --i) {
        const StateEntry& entry = tables[i].at(key);
        if (entry.took) chosen.push_back(model.decomposition().events[i - 1].vertex);
        key = entry.previous;
    }
    chosen = make_set(std::move(chosen));
    const Weight value = best->second.weight;
    ensure(inst.weight_of(chosen) == value, "reconstructed interval witness has the wrong weight");
    ensure(is_monitoring_set(inst, chosen), "reconstructed interval witness does not monitor the instance");
    return Solution::feasible(std::move(chosen), value);
}

bool unit_interval_bound_check(const IntervalRealization& real, std::span<const Vertex> clique) {
    if (!real.is_unit()) throw ContractViolation("realization is not unit");
    const Graph g = real.intersection_graph();
    require_vertex_subset(g, clique);
    if (!g.is_clique(clique)) throw ContractViolation("vertex set is not a clique");
    const std::size_t omega = nice_path_decomposition(real).width();
    return g.closed_neighborhood(clique).size() <= 3 * omega;
}

}  // namespace edgemon
