#include "edgemon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "edgemon/errors.hpp"
#include "edgemon/monitoring.hpp"

namespace edgemon {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

int popcount(Mask m) { return std::popcount(m); }

void check_budget(int vertex_count, const SearchBudget& budget) {
    if (vertex_count > budget.max_vertices) {
        throw ResourceError("instance has " + std::to_string(vertex_count) + " vertices; search budget allows " +
                            std::to_string(budget.max_vertices));
    }
    if (vertex_count > 64) throw ResourceError("exact search supports at most 64 vertices");
}

class NodeCounter {
public:
    explicit NodeCounter(std::optional<std::uint64_t> limit) : limit_(limit) {}

    void tick() {
        if (limit_ && ++count_ > *limit_) throw ResourceError("search node limit exceeded");
    }

private:
    std::optional<std::uint64_t> limit_;
    std::uint64_t count_ = 0;
};

struct ScaledWeights {
    std::vector<std::int64_t> value;
    std::int64_t denominator = 1;
};

// Rational weights rescaled to integers over a common denominator.
ScaledWeights scale_weights(std::span<const Weight> w) {
    constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
    ScaledWeights out;
    for (const Weight& x : w) {
        const std::int64_t d = x.denominator();
        const __int128 next = static_cast<__int128>(out.denominator / std::gcd(out.denominator, d)) * d;
        if (next > kLimit) throw ResourceError("weight denominators too large for exact search");
        out.denominator = static_cast<std::int64_t>(next);
    }
    __int128 total = 0;
    for (const Weight& x : w) {
        const __int128 scaled = static_cast<__int128>(x.numerator()) * (out.denominator / x.denominator());
        total += scaled;
        if (total > kLimit) throw ResourceError("weights too large for exact search");
        out.value.push_back(static_cast<std::int64_t>(scaled));
    }
    return out;
}

class CoverSearch {
public:
    CoverSearch(const CoverProblem& problem, const SearchBudget& budget)
        : n_(problem.vertex_count), counter_(budget.node_limit) {
        check_budget(n_, budget);
        if (problem.weight.size() != static_cast<std::size_t>(n_)) throw InputError("cover weights size mismatch");
        auto scaled = scale_weights(problem.weight);
        weight_ = std::move(scaled.value);
        denominator_ = scaled.denominator;
        if (problem.allowed) {
            for (Vertex v : *problem.allowed) allowed_ |= bit(v);
        } else {
            allowed_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        }
        for (const auto& c : problem.constraints) {
            if (c.need <= 0) continue;
            Mask m = 0;
            for (Vertex v : c.candidates) {
                if (v < 0 || v >= n_) throw InputError("cover candidate out of range");
                m |= bit(v);
            }
            constraints_.push_back({m, c.need});
        }
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return weight_[a] < weight_[b]; });
    }

    Weight to_rational(std::int64_t scaled) const { return Weight(scaled, denominator_); }

    bool trivially_infeasible() const {
        return std::any_of(constraints_.begin(), constraints_.end(),
                           [&](const Constraint& c) { return popcount(c.mask & allowed_) < c.need; });
    }

    // Minimum scaled weight, or nullopt if infeasible.
    std::optional<std::int64_t> optimum() {
        if (trivially_infeasible()) return std::nullopt;
        mode_ = Mode::optimize;
        best_ = std::numeric_limits<std::int64_t>::max();
        search(0, ~allowed_, 0);
        if (best_ == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
        return best_;
    }

    // Lexicographically smallest set among those of weight `opt`.
    Mask canonical_witness(std::int64_t opt) {
        mode_ = Mode::exists;
        bound_ = opt;
        Mask chosen = 0;
        Mask excluded = ~allowed_;
        for (int v = 0; v < n_; ++v) {
            if (satisfied(chosen)) break;
            if (excluded & bit(v)) continue;
            const std::int64_t w = weight_of(chosen) + weight_[v];
            found_ = false;
            if (w <= bound_) search(chosen | bit(v), excluded, w);
            if (found_) {
                chosen |= bit(v);
            } else {
                excluded |= bit(v);
            }
        }
        ensure(satisfied(chosen) && weight_of(chosen) == opt, "canonical witness lost optimality");
        return chosen;
    }

private:
    enum class Mode { optimize, exists };

    struct Constraint {
        Mask mask;
        int need;
    };

    std::int64_t weight_of(Mask m) const {
        std::int64_t total = 0;
        for (int v = 0; v < n_; ++v)
            if (m & bit(v)) total += weight_[v];
        return total;
    }

    bool satisfied(Mask chosen) const {
        return std::all_of(constraints_.begin(), constraints_.end(),
                           [&](const Constraint& c) { return popcount(c.mask & chosen) >= c.need; });
    }

    std::int64_t cheapest(Mask avail, int count) const {
        std::int64_t total = 0;
        for (int v : order_) {
            if (count == 0) break;
            if (avail & bit(v)) {
                total += weight_[v];
                --count;
            }
        }
        return total;
    }

    void search(Mask chosen, Mask excluded, std::int64_t weight) {
        counter_.tick();
        if (mode_ == Mode::exists && found_) return;

        int branch = -1;
        int branch_residual = 0;
        int branch_avail = 0;
        std::int64_t lower = 0;
        for (std::size_t j = 0; j < constraints_.size(); ++j) {
            const auto& c = constraints_[j];
            const int residual = c.need - popcount(c.mask & chosen);
            if (residual <= 0) continue;
            const Mask avail = c.mask & ~chosen & ~excluded;
            const int count = popcount(avail);
            if (count < residual) return;
            lower = std::max(lower, cheapest(avail, residual));
            if (residual > branch_residual || (residual == branch_residual && count < branch_avail)) {
                branch = static_cast<int>(j);
                branch_residual = residual;
                branch_avail = count;
            }
        }

        if (mode_ == Mode::optimize) {
            if (weight + lower >= best_) return;
        } else if (weight + lower > bound_) {
            return;
        }

        if (branch < 0) {
            if (mode_ == Mode::optimize) {
                best_ = weight;
            } else {
                found_ = true;
            }
            return;
        }

        // Disjoint branches: the i-th branch takes the i-th available candidate
        // and rules out the ones before it.
        const auto& c = constraints_[branch];
        Mask avail = c.mask & ~chosen & ~excluded;
        Mask ruled_out = 0;
        for (int v : order_) {
            if (!(avail & bit(v))) continue;
            if (popcount(avail & ~ruled_out) < branch_residual) break;
            search(chosen | bit(v), excluded | ruled_out, weight + weight_[v]);
            if (mode_ == Mode::exists && found_) return;
            ruled_out |= bit(v);
        }
    }

    int n_;
    NodeCounter counter_;
    std::vector<std::int64_t> weight_;
    std::int64_t denominator_ = 1;
    Mask allowed_ = 0;
    std::vector<Constraint> constraints_;
    std::vector<int> order_;

    Mode mode_ = Mode::optimize;
    std::int64_t best_ = 0;
    std::int64_t bound_ = 0;
    bool found_ = false;
};

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

CoverProblem monitoring_problem(const Instance& inst) {
    const Graph& g = inst.graph();
    CoverProblem p;
    p.vertex_count = g.vertex_count();
    p.weight.assign(inst.weights().begin(), inst.weights().end());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (inst.demand(i) > 0) p.constraints.push_back({monitors(g, edges[i]), inst.demand(i)});
    }
    return p;
}

CoverProblem domination_problem(const Graph& g, std::span<const Weight> w, bool closed, int need) {
    if (w.size() != static_cast<std::size_t>(g.vertex_count())) throw InputError("weight vector size mismatch");
    CoverProblem p;
    p.vertex_count = g.vertex_count();
    p.weight.assign(w.begin(), w.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexSet cand(g.neighbors(v).begin(), g.neighbors(v).end());
        if (closed) cand = set_union(cand, VertexSet{v});
        p.constraints.push_back({std::move(cand), need});
    }
    return p;
}

}  // namespace

Solution solve_cover(const CoverProblem& problem, const SearchBudget& budget) {
    CoverSearch search(problem, budget);
    const auto opt = search.optimum();
    if (!opt) return Solution::infeasible();
    VertexSet set = mask_to_set(search.canonical_witness(*opt));
    Weight value(0);
    for (Vertex v : set) value += problem.weight[v];
    return Solution::feasible(std::move(set), value);
}

std::optional<Weight> cover_optimum(const CoverProblem& problem, const SearchBudget& budget) {
    CoverSearch search(problem, budget);
    const auto opt = search.optimum();
    if (!opt) return std::nullopt;
    return search.to_rational(*opt);
}

Solution exact_gamma_m(const Instance& inst, const SearchBudget& budget) {
    return solve_cover(monitoring_problem(inst), budget);
}

std::optional<Weight> exact_gamma_m_value(const Instance& inst, const SearchBudget& budget) {
    return cover_optimum(monitoring_problem(inst), budget);
}

Solution exact_gamma_t(const Graph& g, std::span<const Weight> w, const SearchBudget& budget) {
    return solve_cover(domination_problem(g, w, false, 1), budget);
}

Solution exact_double_dom(const Graph& g, std::span<const Weight> w, const SearchBudget& budget) {
    return solve_cover(domination_problem(g, w, true, 2), budget);
}

namespace {

class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, const SearchBudget& budget) : n_(g.vertex_count()), counter_(budget.node_limit) {
        check_budget(n_, budget);
        closed_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            closed_[v] = bit(v);
            for (Vertex u : g.neighbors(v)) closed_[v] |= bit(u);
        }
    }

    Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

    // alpha(G[pool]), stopping early once `target` is reached.
    int alpha(Mask pool, int target) {
        best_ = 0;
        target_ = target;
        grow(pool, 0);
        return best_;
    }

    std::optional<VertexSet> lexicographic(int k) {
        if (k <= 0) return VertexSet{};
        if (alpha(all(), k) < k) return std::nullopt;
        VertexSet chosen;
        Mask pool = all();
        for (int v = 0; v < n_ && static_cast<int>(chosen.size()) < k; ++v) {
            if (!(pool & bit(v))) continue;
            const Mask rest = pool & ~closed_[v];
            const int need = k - static_cast<int>(chosen.size()) - 1;
            if (need == 0 || alpha(rest, need) >= need) {
                chosen.push_back(v);
                pool = rest;
            } else {
                pool &= ~bit(v);
            }
        }
        ensure(static_cast<int>(chosen.size()) == k, "independent set reconstruction failed");
        return chosen;
    }

private:
    void grow(Mask pool, int size) {
        counter_.tick();
        if (best_ >= target_) return;
        if (pool == 0) {
            best_ = std::max(best_, size);
            return;
        }
        if (size + popcount(pool) <= best_) return;
        int pick = -1;
        int pick_degree = -1;
        for (Mask m = pool; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = popcount(closed_[v] & pool) - 1;
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        if (pick_degree == 0) {
            best_ = std::max(best_, size + popcount(pool));
            return;
        }
        grow(pool & ~closed_[pick], size + 1);
        grow(pool & ~bit(pick), size);
    }

    int n_;
    NodeCounter counter_;
    std::vector<Mask> closed_;
    int best_ = 0;
    int target_ = 0;
};

}  // namespace

std::optional<VertexSet> exists_independent_set(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 0) throw InputError("independent set size must be nonnegative");
    if (k > g.vertex_count()) {
        check_budget(g.vertex_count(), budget);
        return std::nullopt;
    }
    return IndependentSetSearch(g, budget).lexicographic(k);
}

int independence_number(const Graph& g, const SearchBudget& budget) {
    IndependentSetSearch search(g, budget);
    return search.alpha(search.all(), g.vertex_count());
}

Solution exact_vertex_cover(const Graph& g, const SearchBudget& budget) {
    const int alpha = independence_number(g, budget);
    const auto independent = exists_independent_set(g, alpha, budget);
    ensure(independent.has_value(), "maximum independent set vanished");
    VertexSet cover;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(*independent, v)) cover.push_back(v);
    const auto size = static_cast<std::int64_t>(cover.size());
    return Solution::feasible(std::move(cover), Weight(size));
}

std::vector<Weight> unit_weights(int vertex_count) {
    return std::vector<Weight>(static_cast<std::size_t>(vertex_count), Weight(1));
}

}  // namespace edgemon
