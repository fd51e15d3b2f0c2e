#include "edgemon/block_solver.hpp"

#include <algorithm>
#include <string>

#include "edgemon/complete_solvers.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"
#include "edgemon/rng.hpp"

namespace edgemon {

bool BlockCutTree::is_block_graph() const {
    return std::all_of(block_is_clique.begin(), block_is_clique.end(), [](char c) { return c != 0; });
}

int BlockCutTree::block_of_edge(const Graph& g, Vertex a, Vertex b) const {
    if (!g.adjacent(a, b)) throw InputError("not an edge: " + std::to_string(a) + " " + std::to_string(b));
    for (int idx : vertex_blocks.at(a)) {
        if (set_contains(blocks[idx], b)) return idx;
    }
    throw InvariantError("edge outside every block");
}

BlockCutTree block_cut_tree(const Graph& g) {
    const int n = g.vertex_count();
    BlockCutTree tree;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Edge> edge_stack;
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int clock = 0;

    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = clock++;
        if (g.degree(s) == 0) {
            tree.blocks.push_back({s});
            continue;
        }
        frames.push_back({s, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            const auto nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = clock++;
                    frames.push_back({w, 0});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            frames.pop_back();
            if (frames.empty()) break;
            const Vertex p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                const Edge tree_edge(p, v);
                std::vector<Vertex> members;
                for (;;) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    members.push_back(e.u);
                    members.push_back(e.v);
                    if (e == tree_edge) break;
                }
                tree.blocks.push_back(make_set(std::move(members)));
            }
        }
    }

    std::sort(tree.blocks.begin(), tree.blocks.end());
    tree.vertex_blocks.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
        tree.block_is_clique.push_back(g.is_clique(tree.blocks[i]) ? 1 : 0);
        for (Vertex v : tree.blocks[i]) tree.vertex_blocks[v].push_back(static_cast<int>(i));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (tree.vertex_blocks[v].size() >= 2) tree.cutpoints.push_back(v);
    }
    return tree;
}

namespace {

struct BlockSolutions {
    Solution unforced;
    Solution forced;
};

class LeafEliminator {
public:
    LeafEliminator(const Instance& inst, const BlockCutTree& tree, const BlockSolverOptions& options)
        : inst_(inst), tree_(tree), options_(options), weight_(inst.weights().begin(), inst.weights().end()),
          active_(tree.blocks.size(), 1), live_count_(static_cast<std::size_t>(inst.vertex_count()), 0),
          rng_(options.seed) {
        for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
            for (Vertex v : tree.blocks[b]) ++live_count_[v];
        }
    }

    Solution run(BlockSolveTrace* trace) {
        std::vector<LeafStep> steps;
        std::vector<int> finals;
        VertexSet chosen;
        Weight total(0);

        for (;;) {
            std::vector<std::pair<int, Vertex>> leaves;  // (block, cut or -1)
            for (std::size_t b = 0; b < tree_.blocks.size(); ++b) {
                if (!active_[b]) continue;
                int shared = 0;
                Vertex cut = -1;
                for (Vertex v : tree_.blocks[b]) {
                    if (live_count_[v] >= 2) {
                        ++shared;
                        cut = v;
                    }
                }
                if (shared <= 1) leaves.emplace_back(static_cast<int>(b), cut);
            }
            if (leaves.empty()) break;
            ensure(!leaves.empty(), "block-cut forest without a leaf");

            std::size_t pick = 0;
            switch (options_.order) {
                case LeafOrder::smallest_block: pick = 0; break;
                case LeafOrder::largest_block: pick = leaves.size() - 1; break;
                case LeafOrder::seeded: pick = static_cast<std::size_t>(rng_.uniform(0, static_cast<std::int64_t>(leaves.size()) - 1)); break;
            }
            const auto [block, cut] = leaves[pick];
            active_[block] = 0;
            for (Vertex v : tree_.blocks[block]) --live_count_[v];

            const VertexSet& members = tree_.blocks[block];
            if (members.size() < 2) continue;  // isolated vertex

            BlockSolutions sol = solve_leaf(members, cut);
            if (!sol.unforced.is_feasible()) return Solution::infeasible();
            total += sol.unforced.value();
            if (cut < 0) {
                finals.push_back(block);
                chosen = set_union(chosen, sol.unforced.set());
                continue;
            }
            ensure(sol.forced.is_feasible(), "forced leaf optimum infeasible while unforced is feasible");
            const Weight d = sol.forced.value() - sol.unforced.value();
            ensure(d >= 0, "negative cut-vertex weight in leaf elimination");
            VertexSet forced_set = sol.forced.set();
            if (set_contains(sol.unforced.set(), cut)) forced_set = sol.unforced.set();
            steps.push_back({block, cut, sol.unforced.value(), sol.forced.value(), sol.unforced.set(), forced_set});
            weight_[cut] = d;
        }

        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            const VertexSet& add = set_contains(chosen, it->cut) ? it->forced_set : it->unforced_set;
            chosen = set_union(chosen, add);
        }
        ensure(inst_.weight_of(chosen) == total, "replayed witness weight differs from the computed optimum");
        ensure(is_monitoring_set(inst_, chosen), "replayed witness does not monitor the instance");
        if (trace) *trace = {std::move(steps), std::move(finals)};
        return Solution::feasible(std::move(chosen), total);
    }

private:
    BlockSolutions solve_leaf(const VertexSet& members, Vertex cut) {
        const int size = static_cast<int>(members.size());
        const Graph local = Graph::complete(size);
        std::vector<Demand> demand;
        demand.reserve(local.edge_count());
        for (const Edge& e : local.edges()) demand.push_back(inst_.demand(members[e.u], members[e.v]));
        std::vector<Weight> weight;
        weight.reserve(members.size());
        for (Vertex v : members) weight.push_back(weight_[v]);
        const CompleteInstance ci(Instance(local, std::move(demand), std::move(weight)));

        std::optional<Vertex> local_cut;
        if (cut >= 0) local_cut = static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), cut) - members.begin());

        const auto k = ci.instance().uniform_demand();
        const bool fast = options_.uniform_fast_path && k && *k > 0;
        auto solve = [&](std::optional<Vertex> force) {
            return fast ? solve_complete_uniform(ci, force) : solve_complete_cbounded(ci, force);
        };
        BlockSolutions out{globalize(solve(std::nullopt), members), Solution::infeasible()};
        if (local_cut) out.forced = globalize(solve(local_cut), members);
        return out;
    }

    static Solution globalize(const Solution& s, const VertexSet& members) {
        if (!s.is_feasible()) return s;
        VertexSet global;
        for (Vertex v : s.set()) global.push_back(members[v]);
        return Solution::feasible(std::move(global), s.value());
    }

    const Instance& inst_;
    const BlockCutTree& tree_;
    const BlockSolverOptions& options_;
    std::vector<Weight> weight_;
    std::vector<char> active_;
    std::vector<int> live_count_;
    Rng rng_;
};

}  // namespace

Solution solve_block(const Instance& inst, const BlockSolverOptions& options, BlockSolveTrace* trace) {
    if (options.demand_bound && inst.max_demand() > *options.demand_bound) {
        throw ContractViolation("maximum demand " + std::to_string(inst.max_demand()) + " exceeds the configured bound " +
                                std::to_string(*options.demand_bound));
    }
    const Graph& g = inst.graph();
    const BlockCutTree tree = block_cut_tree(g);
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        if (!tree.block_is_clique[b]) throw InputError("not a block graph: block " + std::to_string(b) + " is not a clique");
    }
    for (const Edge& e : g.edges()) {
        const VertexSet& block = tree.blocks[tree.block_of_edge(g, e.u, e.v)];
        for (Vertex m : monitors(g, e)) ensure(set_contains(block, m), "a monitor lies outside the edge's block");
    }
    return LeafEliminator(inst, tree, options).run(trace);
}

}  // namespace edgemon
