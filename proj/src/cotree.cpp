#include "edgemon/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "edgemon/errors.hpp"

namespace edgemon {

Cotree Cotree::leaf(Vertex v) {
    if (v < 0) throw InputError("negative cotree leaf");
    Cotree t;
    t.nodes_.push_back({Kind::leaf, v, {}});
    t.root_ = 0;
    return t;
}

int Cotree::append_subtree(const Cotree& other) {
    const int offset = static_cast<int>(nodes_.size());
    for (Node n : other.nodes_) {
        for (int& c : n.children) c += offset;
        nodes_.push_back(std::move(n));
    }
    return other.root_ + offset;
}

Cotree Cotree::combine(Kind kind, std::vector<Cotree> children) {
    if (kind == Kind::leaf) throw InputError("combine() needs union or join");
    if (children.size() < 2) throw InputError("cotree internal node needs at least two children");
    Cotree t;
    Node top{kind, -1, {}};
    for (const Cotree& c : children) top.children.push_back(t.append_subtree(c));
    t.nodes_.push_back(std::move(top));
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Cotree parse_all() {
        Cotree t = parse_node();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cotree expression: " + what + " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')')
            ++pos_;
        if (start == pos_) fail("expected a word");
        return text_.substr(start, pos_ - start);
    }

    Cotree parse_node() {
        expect('(');
        const std::string_view head = word();
        if (head == "leaf") {
            const std::string_view id = word();
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), v);
            if (ec != std::errc{} || ptr != id.data() + id.size()) fail("bad leaf id");
            expect(')');
            return Cotree::leaf(v);
        }
        Cotree::Kind kind;
        if (head == "union") {
            kind = Cotree::Kind::disjoint_union;
        } else if (head == "join") {
            kind = Cotree::Kind::join;
        } else {
            fail("unknown node '" + std::string(head) + "'");
        }
        std::vector<Cotree> children;
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ')') break;
            children.push_back(parse_node());
        }
        expect(')');
        return Cotree::combine(kind, std::move(children));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Cotree Cotree::parse(std::string_view expression) { return ExpressionParser(expression).parse_all(); }

std::string Cotree::to_string() const {
    std::string out;
    auto emit = [&](auto&& self, int index) -> void {
        const Node& n = nodes_[index];
        if (n.kind == Kind::leaf) {
            out += "(leaf " + std::to_string(n.vertex) + ")";
            return;
        }
        out += n.kind == Kind::join ? "(join" : "(union";
        for (int c : n.children) {
            out += ' ';
            self(self, c);
        }
        out += ')';
    };
    if (root_ >= 0) emit(emit, root_);
    return out;
}

VertexSet Cotree::vertices_below(int index) const {
    VertexSet out;
    std::vector<int> stack{index};
    while (!stack.empty()) {
        const Node& n = nodes_.at(stack.back());
        stack.pop_back();
        if (n.kind == Kind::leaf) {
            out.push_back(n.vertex);
        } else {
            stack.insert(stack.end(), n.children.begin(), n.children.end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet Cotree::vertices() const { return root_ < 0 ? VertexSet{} : vertices_below(root_); }

Graph Cotree::realize() const {
    const VertexSet leaves = vertices();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] != static_cast<Vertex>(i)) throw InputError("cotree leaves must be exactly 0..n-1");
    }
    std::vector<Edge> edges;
    for (int index = 0; index < static_cast<int>(nodes_.size()); ++index) {
        const Node& n = nodes_[index];
        if (n.kind != Kind::join) continue;
        std::vector<VertexSet> parts;
        for (int c : n.children) parts.push_back(vertices_below(c));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (Vertex a : parts[i])
                    for (Vertex b : parts[j]) edges.emplace_back(a, b);
    }
    return Graph(static_cast<int>(leaves.size()), edges);
}

bool Cotree::realizes(const Graph& g) const {
    try {
        return realize() == g;
    } catch (const InputError&) {
        return false;
    }
}

}  // namespace edgemon
