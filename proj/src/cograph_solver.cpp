#include "edgemon/cograph_solver.hpp"

#include "edgemon/errors.hpp"

namespace edgemon {

namespace {

std::optional<Cotree> build(const Graph& g, const VertexSet& part) {
    if (part.size() == 1) return Cotree::leaf(part.front());
    const Graph sub = g.induced(part);
    auto groups = sub.components();
    Cotree::Kind kind = Cotree::Kind::disjoint_union;
    if (groups.size() == 1) {
        groups = sub.complement().components();
        kind = Cotree::Kind::join;
        if (groups.size() == 1) return std::nullopt;
    }
    std::vector<Cotree> children;
    for (const auto& group : groups) {
        VertexSet global;
        for (Vertex local : group) global.push_back(part[local]);
        auto child = build(g, global);
        if (!child) return std::nullopt;
        children.push_back(std::move(*child));
    }
    return Cotree::combine(kind, std::move(children));
}

Solution add(const Solution& a, const Solution& b) {
    if (!a.is_feasible() || !b.is_feasible()) return Solution::infeasible();
    return Solution::feasible(set_union(a.set(), b.set()), a.value() + b.value());
}

// Keeps `best` unless `candidate` is strictly lighter.
void keep_min(Solution& best, const Solution& candidate) {
    if (!candidate.is_feasible()) return;
    if (!best.is_feasible() || candidate.value() < best.value()) best = candidate;
}

Solution single(Vertex v, const Weight& w) { return Solution::feasible({v}, w); }

NodeSummary combine_union(const NodeSummary& a, const NodeSummary& b) {
    NodeSummary s;
    s.gamma_m = add(a.gamma_m, b.gamma_m);
    s.gamma_t = add(a.gamma_t, b.gamma_t);
    const bool take_a = a.w_min < b.w_min || (a.w_min == b.w_min && a.w_min_vertex < b.w_min_vertex);
    s.w_min = take_a ? a.w_min : b.w_min;
    s.w_min_vertex = take_a ? a.w_min_vertex : b.w_min_vertex;
    s.has_isolated = a.has_isolated || b.has_isolated;
    s.size = a.size + b.size;
    return s;
}

NodeSummary combine_join(const NodeSummary& a, const NodeSummary& b) {
    NodeSummary s = combine_union(a, b);
    s.has_isolated = false;
    const Solution a_min = single(a.w_min_vertex, a.w_min);
    const Solution b_min = single(b.w_min_vertex, b.w_min);

    Solution t = add(a_min, b_min);
    keep_min(t, a.gamma_t);
    keep_min(t, b.gamma_t);
    s.gamma_t = t;

    Solution m = add(a.gamma_t, b_min);
    keep_min(m, add(a_min, b.gamma_t));
    if (!a.has_isolated) keep_min(m, a.gamma_m);
    if (!b.has_isolated) keep_min(m, b.gamma_m);
    s.gamma_m = m;
    return s;
}

}  // namespace

std::optional<Cotree> cotree_build(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    VertexSet all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return build(g, all);
}

std::vector<NodeSummary> cotree_summaries(const Cotree& t, std::span<const Weight> w) {
    const auto& nodes = t.nodes();
    std::vector<NodeSummary> out(nodes.size());
    std::vector<char> done(nodes.size(), 0);
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        const int idx = stack.back();
        const auto& node = nodes[idx];
        if (node.kind == Cotree::Kind::leaf) {
            const Vertex v = node.vertex;
            if (v < 0 || static_cast<std::size_t>(v) >= w.size()) throw InputError("cotree leaf without a weight");
            NodeSummary& s = out[idx];
            s.gamma_m = Solution::feasible({}, Weight(0));
            s.gamma_t = Solution::infeasible();
            s.w_min = w[v];
            s.w_min_vertex = v;
            s.has_isolated = true;
            s.size = 1;
            done[idx] = 1;
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (int child : node.children) {
            if (!done[child]) {
                stack.push_back(child);
                ready = false;
            }
        }
        if (!ready) continue;
        stack.pop_back();
        NodeSummary acc = out[node.children.front()];
        for (std::size_t i = 1; i < node.children.size(); ++i) {
            const NodeSummary& next = out[node.children[i]];
            acc = node.kind == Cotree::Kind::join ? combine_join(acc, next) : combine_union(acc, next);
        }
        out[idx] = std::move(acc);
        done[idx] = 1;
    }
    return out;
}

Solution gamma_t_cograph(const Cotree& t, std::span<const Weight> w) { return cotree_summaries(t, w)[t.root()].gamma_t; }

Solution solve_cograph(const Instance& inst, const Cotree& t) {
    const auto k = inst.uniform_demand();
    if (inst.graph().edge_count() > 0 && (!k || *k != 1)) {
        throw ContractViolation("cograph solver needs 1-uniform demands");
    }
    if (!t.realizes(inst.graph())) throw InputError("cotree does not realize the instance graph");
    return cotree_summaries(t, inst.weights())[t.root()].gamma_m;
}

}  // namespace edgemon
