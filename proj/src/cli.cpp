#include "edgemon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "edgemon/block_solver.hpp"
#include "edgemon/cograph_solver.hpp"
#include "edgemon/complete_solvers.hpp"
#include "edgemon/errors.hpp"
#include "edgemon/generators.hpp"
#include "edgemon/instance_io.hpp"
#include "edgemon/interval_dp.hpp"
#include "edgemon/monitoring.hpp"
#include "edgemon/oracle.hpp"
#include "edgemon/planar_ptas.hpp"
#include "edgemon/reductions.hpp"

namespace edgemon::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    int threads = 1;
};

SearchBudget budget_from_env(SearchBudget base) {
    if (const char* raw = std::getenv("EM_BUDGET_VERTICES")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(raw, &used);
            if (used != std::string(raw).size() || value <= 0) throw std::invalid_argument(raw);
            base.max_vertices = value;
        } catch (const std::exception&) {
            throw UsageError(std::string("EM_BUDGET_VERTICES must be a positive integer, got '") + raw + "'");
        }
    }
    return base;
}

InstanceDocument load(const Context& ctx, const std::string& path) {
    if (path.empty() || path == "-") return parse_instance(ctx.in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    return parse_instance(file);
}

Weight parse_epsilon(const std::string& text) {
    const Weight eps = parse_weight(text);
    if (eps <= 0) throw UsageError("epsilon must be positive");
    return eps;
}

int report(std::ostream& out, const Solution& s) {
    if (!s.is_feasible()) {
        out << "status infeasible\n";
        return negative;
    }
    out << "status feasible\n";
    out << "value " << format_weight(s.value()) << "\n";
    out << "set";
    for (Vertex v : s.set()) out << ' ' << v;
    out << "\n";
    return ok;
}

bool is_block_graph(const Graph& g) { return block_cut_tree(g).is_block_graph(); }

Solution solve_split(const Instance& inst) {
    const auto k = inst.uniform_demand();
    if (inst.graph().edge_count() > 0 && (!k || *k != 1)) throw ContractViolation("split solver needs 1-uniform demands");
    for (Vertex v = 0; v < inst.vertex_count(); ++v) {
        if (inst.weight(v) != Weight(1)) throw ContractViolation("split solver needs unit weights");
    }
    return split_gamma_m(inst.graph(), budget_from_env(SearchBudget::domination()));
}

Solution solve_by_class(const InstanceDocument& doc, const std::string& cls, bool uniform_fast) {
    const Instance& inst = doc.instance;
    if (cls == "complete") return solve_complete_cbounded(CompleteInstance(inst));
    if (cls == "block") {
        BlockSolverOptions options;
        options.uniform_fast_path = uniform_fast;
        return solve_block(inst, options);
    }
    if (cls == "interval") {
        if (!doc.realization) throw InputError("interval solver needs 'i' lines in the instance");
        return solve_interval(inst, *doc.realization);
    }
    if (cls == "cograph") {
        if (doc.cotree) return solve_cograph(inst, *doc.cotree);
        const auto tree = cotree_build(inst.graph());
        if (!tree) throw InputError("graph is not a cograph (it has an induced P4)");
        return solve_cograph(inst, *tree);
    }
    if (cls == "split") return solve_split(inst);
    if (cls == "auto") {
        if (doc.realization) return solve_by_class(doc, "interval", uniform_fast);
        if (doc.cotree) return solve_by_class(doc, "cograph", uniform_fast);
        if (inst.graph().is_complete()) return solve_by_class(doc, "complete", uniform_fast);
        if (is_block_graph(inst.graph())) return solve_by_class(doc, "block", uniform_fast);
        throw InputError(
            "no class certificate found: add 'i' or 't' lines, pick --class explicitly, or use the oracle subcommand");
    }
    throw UsageError("unknown class " + cls);
}

// Vertex ids from a solution file: plain integers, or the 'set' line of solver output.
VertexSet read_solution(const std::string& path, std::istream& fallback) {
    std::ifstream file;
    std::istream* in = &fallback;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw InputError("cannot open " + path);
        in = &file;
    }
    std::vector<Vertex> ids;
    std::string line;
    int number = 0;
    while (std::getline(*in, line)) {
        ++number;
        std::istringstream words(line);
        std::string word;
        bool first = true;
        while (words >> word) {
            if (word.front() == '#') break;
            if (first && (word == "status" || word == "value")) break;
            if (first && word == "set") {
                first = false;
                continue;
            }
            first = false;
            Vertex v = 0;
            const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
            if (ec != std::errc{} || ptr != word.data() + word.size()) throw ParseError(number, "bad vertex id '" + word + "'");
            ids.push_back(v);
        }
    }
    return make_set(std::move(ids));
}

DemandSpec demand_spec(Demand low, Demand high) {
    if (low < 0 || high < low) throw UsageError("demand range must satisfy 0 <= low <= high");
    return DemandSpec::range(low, high);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad integer list '" + text + "'");
        }
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto s = std::stoull(text);
            return {s, s};
        }
        const auto a = std::stoull(text.substr(0, dots));
        const auto b = std::stoull(text.substr(dots + 2));
        if (b < a) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::exception&) {
        throw UsageError(what + " must look like A..B or A, got '" + text + "'");
    }
}

struct GenerateArgs {
    std::string cls = "complete";
    int n = 6;
    std::uint64_t seed = 0;
    Demand demand_low = 1;
    Demand demand_high = 1;
    bool random_weights = false;
    std::int64_t max_num = 9;
    std::int64_t max_den = 1;
    std::string sizes = "3,3";
    int max_length = 4;
    int clique = 3;
    int independent = 2;
    std::string probability = "1/2";
    bool min_degree_two = false;
    int rows = 3;
    int cols = 3;
    bool triangulate = false;
    int box = 10;
};

InstanceDocument generate(const GenerateArgs& a) {
    const DemandSpec d = demand_spec(a.demand_low, a.demand_high);
    const WeightSpec w = a.random_weights ? WeightSpec::random(a.max_num, a.max_den) : WeightSpec::unit_weights();
    if (a.n < 1) throw UsageError("--n must be at least 1");
    InstanceDocument doc;
    std::ostringstream head;
    head << " generated class=" << a.cls << " seed=" << a.seed;
    if (a.cls == "complete") {
        doc.instance = gen_complete(a.n, d, w, a.seed);
    } else if (a.cls == "block") {
        const auto sizes = parse_int_list(a.sizes);
        if (sizes.empty() || std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 2; })) {
            throw UsageError("--sizes needs clique sizes >= 2");
        }
        doc.instance = gen_block_graph(sizes, a.seed, d, w);
    } else if (a.cls == "interval" || a.cls == "unit-interval") {
        const LengthSpec len = a.cls == "interval" ? LengthSpec{false, a.max_length} : LengthSpec::unit_length(a.max_length);
        auto sample = gen_interval(a.n, len, a.seed, d, w);
        doc.instance = std::move(sample.instance);
        doc.realization = std::move(sample.realization);
    } else if (a.cls == "cograph") {
        auto sample = gen_cograph(a.n, a.seed, w, d);
        doc.instance = std::move(sample.instance);
        doc.cotree = std::move(sample.cotree);
    } else if (a.cls == "split") {
        auto sample = gen_split(a.clique, a.independent, parse_weight(a.probability), a.seed, a.min_degree_two, d, w);
        doc.instance = std::move(sample.instance);
    } else if (a.cls == "planar") {
        doc.instance = gen_planar(a.rows, a.cols, a.triangulate, a.seed, d, w);
    } else if (a.cls == "unit-disk") {
        auto sample = gen_unit_disk(a.n, a.box, a.seed, d, w);
        doc.instance = std::move(sample.instance);
        doc.comments.push_back(head.str());
        for (std::size_t v = 0; v < sample.coordinates.size(); ++v) {
            doc.comments.push_back(" coord " + std::to_string(v) + " " + std::to_string(sample.coordinates[v].x) + " " +
                                   std::to_string(sample.coordinates[v].y) + " (scale " + std::to_string(kLatticeScale) + ")");
        }
        return doc;
    } else {
        throw UsageError("unknown generator class " + a.cls);
    }
    doc.comments.insert(doc.comments.begin(), head.str());
    return doc;
}

struct BenchRow {
    std::uint64_t seed = 0;
    std::optional<Weight> value;
    std::optional<Weight> oracle;
    double millis = 0;
    std::string error;
};

struct BenchArgs {
    std::string cls = "interval";
    std::string seeds = "0..9";
    int n = 10;
    std::string epsilon = "1";
};

std::optional<Weight> value_of(const Solution& s) {
    return s.is_feasible() ? std::optional<Weight>(s.value()) : std::nullopt;
}

BenchRow bench_one(const BenchArgs& a, std::uint64_t seed, const SearchBudget& budget) {
    BenchRow row;
    row.seed = seed;
    const WeightSpec w = WeightSpec::random(9, 3);
    Instance inst;
    std::function<Solution()> solve;
    if (a.cls == "complete") {
        inst = gen_complete(a.n, DemandSpec::range(0, 2), w, seed);
        solve = [&] { return solve_complete_cbounded(CompleteInstance(inst)); };
    } else if (a.cls == "complete-ptas") {
        inst = gen_complete(a.n, DemandSpec::range(0, 5), w, seed);
        const Weight eps = parse_epsilon(a.epsilon);
        solve = [&, eps] { return ptas_complete(CompleteInstance(inst), eps); };
    } else if (a.cls == "block") {
        Rng rng(seed);
        std::vector<int> sizes;
        int total = 0;
        while (total < a.n) {
            sizes.push_back(static_cast<int>(rng.uniform(2, 4)));
            total += sizes.back() - (sizes.size() > 1 ? 1 : 0);
        }
        inst = gen_block_graph(sizes, seed, DemandSpec::range(0, 2), w);
        solve = [&] { return solve_block(inst); };
    } else if (a.cls == "interval") {
        auto sample = gen_interval(a.n, LengthSpec{}, seed, DemandSpec::range(0, 2), w);
        inst = sample.instance;
        solve = [&, real = sample.realization] { return solve_interval(inst, real); };
    } else if (a.cls == "cograph") {
        auto sample = gen_cograph(a.n, seed, w);
        inst = sample.instance;
        solve = [&, tree = sample.cotree] { return solve_cograph(inst, tree); };
    } else if (a.cls == "split") {
        auto sample = gen_split(std::max(3, a.n / 2), a.n - std::max(3, a.n / 2), Weight(3, 5), seed, true);
        inst = sample.instance;
        solve = [&] { return split_gamma_m(inst.graph()); };
    } else if (a.cls == "planar") {
        const int cols = std::max(2, a.n / 3);
        inst = gen_planar(3, cols, true, seed, DemandSpec::constant(1), w);
        const Weight eps = parse_epsilon(a.epsilon);
        solve = [&, eps] { return ptas_planar(inst, eps, budget); };
    } else {
        throw UsageError("unknown bench class " + a.cls);
    }
    try {
        const auto start = std::chrono::steady_clock::now();
        row.value = value_of(solve());
        row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.oracle = value_of(exact_gamma_m(inst, budget));
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::string format_optional(const std::optional<Weight>& w) { return w ? format_weight(*w) : "inf"; }

std::string format_ratio(const BenchRow& r) {
    if (!r.value || !r.oracle) return r.value == r.oracle ? "1.000" : "-";
    if (*r.oracle == Weight(0)) return *r.value == Weight(0) ? "1.000" : "-";
    const Weight q = *r.value / *r.oracle;
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << boost::rational_cast<double>(q);
    return s.str();
}

int run_bench(const Context& ctx, const BenchArgs& a) {
    const auto [first, last] = parse_range(a.seeds, "--seeds");
    const SearchBudget budget = budget_from_env(SearchBudget::monitoring());
    // Reject unknown classes before spawning workers.
    if (const std::vector<std::string> known{"complete", "complete-ptas", "block", "interval", "cograph", "split", "planar"};
        std::find(known.begin(), known.end(), a.cls) == known.end()) {
        throw UsageError("unknown bench class " + a.cls);
    }
    const std::size_t count = static_cast<std::size_t>(last - first + 1);
    std::vector<BenchRow> rows(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) rows[i] = bench_one(a, first + i, budget);
    };
    const int threads = std::max(1, std::min<int>(ctx.threads, static_cast<int>(count)));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ctx.out << "seed value oracle ratio ms\n";
    bool all_ok = true;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            ctx.out << r.seed << " error - - - # " << r.error << "\n";
            all_ok = false;
            continue;
        }
        ctx.out << r.seed << ' ' << format_optional(r.value) << ' ' << format_optional(r.oracle) << ' ' << format_ratio(r)
                << ' ' << std::fixed << std::setprecision(2) << r.millis << "\n";
        ctx.out.unsetf(std::ios::floatfield);
    }
    return all_ok ? ok : resource_error;
}

Graph graph_from(const Context& ctx, const std::string& path) { return load(ctx, path).instance.graph(); }

int run_reduce(const Context& ctx, const std::string& kind, const std::string& path, int k, int chain_length) {
    const Graph g = graph_from(ctx, path);
    InstanceDocument doc;
    const std::string source = " source " + (path.empty() ? std::string("-") : path) + " n=" + std::to_string(g.vertex_count()) +
                               " m=" + std::to_string(g.edge_count());
    doc.comments.push_back(source);
    if (kind == "tds") {
        doc.instance = reduce_tds_to_em(g);
        doc.comments.push_back(" relation gamma_m = gamma_t(source) + 3");
    } else if (kind == "is") {
        doc.instance = reduce_is_to_em(g, k).instance();
        doc.comments.push_back(" relation gamma_m <= " + std::to_string(k) + " iff alpha(source) >= " + std::to_string(k));
    } else if (kind == "bip-tds") {
        doc.instance = reduce_bip_tds_to_comparability(g);
        doc.comments.push_back(" relation gamma_m = gamma_t(source) + 1");
    } else if (kind == "udg") {
        if (chain_length < 1) throw UsageError("--chain-length must be at least 1");
        const auto r = reduce_planar_vc_to_udg(g, std::vector<int>(g.edge_count(), chain_length));
        doc.instance = r.instance;
        doc.comments.push_back(" relation gamma_m = vc(source) + " + std::to_string(r.offset));
    } else {
        throw UsageError("unknown reduction " + kind);
    }
    write_instance(ctx.out, doc);
    return ok;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
    CLI::App app{"Weighted edge monitoring solvers", "edgemon"};
    app.require_subcommand(1);
    int threads = 1;

    std::string input;
    std::string cls = "auto";
    bool uniform_fast = false;
    auto* solve = app.add_subcommand("solve", "exact class solver");
    solve->add_option("--class", cls)->check(CLI::IsMember({"auto", "complete", "block", "interval", "cograph", "split"}));
    solve->add_option("--in", input, "instance file (default stdin)");
    solve->add_flag("--uniform-fast", uniform_fast, "sorted-weight rule for uniform block leaves");

    std::string approx_class = "complete", epsilon = "1";
    auto* approx = app.add_subcommand("approx", "approximation schemes");
    approx->add_option("--class", approx_class)->check(CLI::IsMember({"complete", "planar"}));
    approx->add_option("--epsilon", epsilon, "positive rational, e.g. 1/2")->required();
    approx->add_option("--in", input);

    std::string oracle_kind = "m";
    auto* oracle = app.add_subcommand("oracle", "exact branch and bound");
    oracle->add_option("--kind", oracle_kind, "m (monitoring), t (total domination) or x2 (double domination)")
        ->check(CLI::IsMember({"m", "t", "x2"}));
    oracle->add_option("--in", input);

    std::string solution_path;
    auto* verify = app.add_subcommand("verify", "check a vertex set certificate");
    verify->add_option("--solution", solution_path)->required();
    verify->add_option("--in", input)->required();

    GenerateArgs gen;
    std::string demand_range;
    auto* generate_cmd = app.add_subcommand("generate", "seeded instance generators");
    generate_cmd->add_option("--class", gen.cls)
        ->check(CLI::IsMember({"complete", "block", "interval", "unit-interval", "cograph", "split", "planar", "unit-disk"}));
    generate_cmd->add_option("--n", gen.n);
    generate_cmd->add_option("--seed", gen.seed);
    generate_cmd->add_option("--demand", demand_range, "C or LOW..HIGH");
    generate_cmd->add_flag("--random-weights", gen.random_weights);
    generate_cmd->add_option("--max-num", gen.max_num);
    generate_cmd->add_option("--max-den", gen.max_den);
    generate_cmd->add_option("--sizes", gen.sizes, "block clique sizes, comma separated");
    generate_cmd->add_option("--max-length", gen.max_length);
    generate_cmd->add_option("--clique", gen.clique);
    generate_cmd->add_option("--independent", gen.independent);
    generate_cmd->add_option("--p", gen.probability);
    generate_cmd->add_flag("--min-degree-two", gen.min_degree_two);
    generate_cmd->add_option("--rows", gen.rows);
    generate_cmd->add_option("--cols", gen.cols);
    generate_cmd->add_flag("--triangulate", gen.triangulate);
    generate_cmd->add_option("--box", gen.box);

    std::string reduce_kind;
    int reduce_k = 1, chain_length = 1;
    auto* reduce = app.add_subcommand("reduce", "hardness reductions as instance transformers");
    reduce->add_option("--kind", reduce_kind)->required()->check(CLI::IsMember({"tds", "is", "bip-tds", "udg"}));
    reduce->add_option("--in", input);
    reduce->add_option("--k", reduce_k);
    reduce->add_option("--chain-length", chain_length);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "solver against oracle on generated seeds");
    bench->add_option("--class", bench_args.cls);
    bench->add_option("--seeds", bench_args.seeds, "A..B");
    bench->add_option("--n", bench_args.n);
    bench->add_option("--epsilon", bench_args.epsilon);
    bench->add_option("--threads", threads, "worker threads, one seed each")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const Context ctx{in, out, threads};
    if (*solve) return report(out, solve_by_class(load(ctx, input), cls, uniform_fast));
    if (*approx) {
        const Weight eps = parse_epsilon(epsilon);
        const InstanceDocument doc = load(ctx, input);
        if (approx_class == "complete") return report(out, ptas_complete(CompleteInstance(doc.instance), eps));
        if (!passes_euler_bound(doc.instance.graph())) out << "# warning: m > 3n-6, graph cannot be planar\n";
        return report(out, ptas_planar(doc.instance, eps, budget_from_env(SearchBudget::monitoring())));
    }
    if (*oracle) {
        const Instance inst = load(ctx, input).instance;
        if (oracle_kind == "m") return report(out, exact_gamma_m(inst, budget_from_env(SearchBudget::monitoring())));
        const SearchBudget b = budget_from_env(SearchBudget::domination());
        if (oracle_kind == "t") return report(out, exact_gamma_t(inst.graph(), inst.weights(), b));
        return report(out, exact_double_dom(inst.graph(), inst.weights(), b));
    }
    if (*verify) {
        const Instance inst = load(ctx, input).instance;
        const VertexSet s = read_solution(solution_path, in);
        require_vertex_subset(inst.graph(), s);
        const auto deficits = monitoring_deficits(inst, s);
        out << "monitoring " << (deficits.empty() ? "true" : "false") << "\n";
        out << "weight " << format_weight(inst.weight_of(s)) << "\n";
        for (const auto& d : deficits) {
            out << "deficit " << d.edge.u << ' ' << d.edge.v << " demand " << d.demand << " monitored " << d.monitored << "\n";
        }
        return deficits.empty() ? ok : negative;
    }
    if (*generate_cmd) {
        if (!demand_range.empty()) {
            const auto [lo, hi] = parse_range(demand_range, "--demand");
            gen.demand_low = static_cast<Demand>(lo);
            gen.demand_high = static_cast<Demand>(hi);
        }
        write_instance(out, generate(gen));
        return ok;
    }
    if (*reduce) return run_reduce(ctx, reduce_kind, input, reduce_k, chain_length);
    if (*bench) return run_bench(ctx, bench_args);
    return usage_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, in, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return usage_error;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return resource_error;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return resource_error;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace edgemon::cli
