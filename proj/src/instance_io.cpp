#include "edgemon/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "edgemon/errors.hpp"

namespace edgemon {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) words.push_back(line.substr(start, i - start));
    }
    return words;
}

template <typename Int>
Int to_int(std::string_view word, std::size_t line) {
    Int value{};
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

InstanceDocument parse_instance(std::istream& in) {
    std::vector<std::string> comments;
    std::optional<std::pair<int, std::size_t>> header;
    std::vector<std::optional<Weight>> weights;
    std::map<Edge, Demand> demand_of;
    std::vector<std::optional<Interval>> intervals;
    std::size_t interval_lines = 0;
    std::optional<Cotree> cotree;

    auto check_vertex = [&](Vertex v, std::size_t line) {
        if (v < 0 || v >= header->first) throw ParseError(line, "vertex id " + std::to_string(v) + " out of range");
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') {
            comments.emplace_back(line.substr(1));
            continue;
        }
        const auto words = split_words(line);
        if (words.empty()) continue;
        const std::string_view tag = words[0];

        if (tag == "p") {
            if (header) throw ParseError(line_no, "duplicate header");
            if (words.size() != 4 || words[1] != "em") throw ParseError(line_no, "header must be 'p em <n> <m>'");
            const int n = to_int<int>(words[2], line_no);
            const auto m = to_int<std::size_t>(words[3], line_no);
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            header.emplace(n, m);
            weights.assign(static_cast<std::size_t>(n), std::nullopt);
            intervals.assign(static_cast<std::size_t>(n), std::nullopt);
            continue;
        }
        if (!header) throw ParseError(line_no, "'" + std::string(tag) + "' line before the 'p em' header");

        if (tag == "v") {
            if (words.size() != 3) throw ParseError(line_no, "expected 'v <id> <weight>'");
            const Vertex v = to_int<Vertex>(words[1], line_no);
            check_vertex(v, line_no);
            if (weights[v]) throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
            Weight w;
            try {
                w = parse_weight(words[2]);
            } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
            }
            if (w < 0) throw ParseError(line_no, "negative weight");
            weights[v] = w;
        } else if (tag == "e") {
            if (words.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <c>'");
            const Vertex a = to_int<Vertex>(words[1], line_no);
            const Vertex b = to_int<Vertex>(words[2], line_no);
            const Demand c = to_int<Demand>(words[3], line_no);
            check_vertex(a, line_no);
            check_vertex(b, line_no);
            if (a == b) throw ParseError(line_no, "self-loop");
            if (c < 0) throw ParseError(line_no, "negative demand");
            if (!demand_of.emplace(Edge(a, b), c).second) throw ParseError(line_no, "parallel edge");
        } else if (tag == "i") {
            if (words.size() != 4) throw ParseError(line_no, "expected 'i <id> <a> <b>'");
            const Vertex v = to_int<Vertex>(words[1], line_no);
            check_vertex(v, line_no);
            const auto a = to_int<std::int64_t>(words[2], line_no);
            const auto b = to_int<std::int64_t>(words[3], line_no);
            if (a >= b) throw ParseError(line_no, "interval must satisfy a < b");
            if (intervals[v]) throw ParseError(line_no, "duplicate interval for vertex " + std::to_string(v));
            intervals[v] = Interval{a, b};
            ++interval_lines;
        } else if (tag == "t") {
            if (cotree) throw ParseError(line_no, "duplicate cotree line");
            const std::size_t at = line.find('t');
            try {
                cotree = Cotree::parse(line.substr(at + 1));
            } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
            }
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
        }
    }

    if (!header) throw ParseError(line_no, "missing 'p em' header");
    if (demand_of.size() != header->second) {
        throw ParseError(line_no, "header declares " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(demand_of.size()));
    }
    if (interval_lines != 0 && interval_lines != static_cast<std::size_t>(header->first)) {
        throw ParseError(line_no, "interval lines must cover every vertex");
    }

    std::vector<Edge> edges;
    std::vector<Demand> demands;
    for (const auto& [e, c] : demand_of) {
        edges.push_back(e);
        demands.push_back(c);
    }
    std::vector<Weight> w;
    for (const auto& x : weights) w.push_back(x.value_or(Weight(1)));

    InstanceDocument doc;
    doc.instance = Instance(Graph(header->first, edges), std::move(demands), std::move(w));
    doc.comments = std::move(comments);
    if (interval_lines != 0) {
        std::vector<Interval> iv;
        for (const auto& x : intervals) iv.push_back(*x);
        doc.realization = IntervalRealization(std::move(iv));
    }
    doc.cotree = std::move(cotree);
    return doc;
}

InstanceDocument parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

InstanceDocument read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceDocument& doc) {
    const Instance& inst = doc.instance;
    const Graph& g = inst.graph();
    for (const auto& c : doc.comments) out << '#' << c << '\n';
    out << "p em " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << format_weight(inst.weight(v)) << '\n';
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << "e " << edges[i].u << ' ' << edges[i].v << ' ' << inst.demand(i) << '\n';
    if (doc.realization) {
        const auto iv = doc.realization->intervals();
        for (std::size_t v = 0; v < iv.size(); ++v) out << "i " << v << ' ' << iv[v].left << ' ' << iv[v].right << '\n';
    }
    if (doc.cotree) out << "t " << doc.cotree->to_string() << '\n';
}

std::string format_instance(const InstanceDocument& doc) {
    std::ostringstream out;
    write_instance(out, doc);
    return out.str();
}

}  // namespace edgemon
