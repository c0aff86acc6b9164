#include "itdom/family.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "itdom/random_graph.hpp"

namespace itdom {

namespace {

using nlohmann::json;

// Tiny recursive-descent parser for generator expressions.
class ExprParser {
public:
    ExprParser(const std::string& text, std::uint64_t default_seed)
        : text_(text), default_seed_(default_seed) {}

    Graph parse() {
        Graph g = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::ParseError,
                    "graph expression '" + text_ + "' at offset " + std::to_string(pos_) + ": " +
                        what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a generator name");
        return text_.substr(start, pos_ - start);
    }

    double number() {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
                text_[end] == '-' || text_[end] == '+' || text_[end] == 'e' || text_[end] == 'E'))
            ++end;
        if (end == pos_) fail("expected a number");
        double out = 0;
        try {
            out = std::stod(text_.substr(pos_, end - pos_));
        } catch (const std::exception&) {
            fail("bad number");
        }
        pos_ = end;
        return out;
    }

    Graph expr() {
        std::string name = ident();
        expect('(');
        Graph out;
        if (name == "path" || name == "cycle" || name == "complete" || name == "empty" ||
            name == "star") {
            int t = static_cast<int>(number());
            if (name == "path") out = path(t);
            else if (name == "cycle") out = cycle(t);
            else if (name == "complete") out = complete(t);
            else if (name == "empty") out = empty_graph(t);
            else out = star(t);
        } else if (name == "random") {
            int n = static_cast<int>(number());
            expect(',');
            double p = number();
            std::uint64_t seed = default_seed_;
            if (eat(',')) seed = static_cast<std::uint64_t>(number());
            out = random_graph(n, p, seed);
        } else if (name == "join") {
            Graph a = expr();
            expect(',');
            Graph b = expr();
            out = join_parts(a, b);
        } else {
            fail("unknown generator '" + name + "'");
        }
        expect(')');
        return out;
    }

    // local copy of the join construction to keep this file free of the
    // products dependency
    static Graph join_parts(const Graph& a, const Graph& b) {
        std::vector<std::pair<int, int>> edges = a.edges();
        for (auto [u, w] : b.edges()) edges.emplace_back(a.n() + u, a.n() + w);
        for (int u = 0; u < a.n(); ++u)
            for (int w = 0; w < b.n(); ++w) edges.emplace_back(u, a.n() + w);
        return Graph(a.n() + b.n(), edges);
    }

    const std::string& text_;
    std::uint64_t default_seed_;
    std::size_t pos_ = 0;
};

std::vector<int> all_roots(const Graph& g) {
    std::vector<int> out(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

CopySpec make_copy(const std::string& expr, std::uint64_t seed) {
    Graph g = parse_graph_expr(expr, seed);
    std::vector<int> roots = all_roots(g);
    return CopySpec{expr, std::move(g), std::move(roots)};
}

} // namespace

Graph parse_graph_expr(const std::string& expr, std::uint64_t default_seed) {
    return ExprParser(expr, default_seed).parse();
}

InstanceFamily parse_family_json(const std::string& text, std::uint64_t default_seed) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("family JSON: ") + e.what());
    }
    InstanceFamily fam;
    fam.max_product_size = j.value("max_product_size", 30);
    for (const auto& b : j.value("bases", json::array())) {
        if (!b.is_string()) throw Error(ErrorKind::ParseError, "family base must be a string");
        std::string expr = b.get<std::string>();
        fam.bases.emplace_back(expr, parse_graph_expr(expr, default_seed));
    }
    for (const auto& c : j.value("copies", json::array())) {
        if (c.is_string()) {
            fam.copies.push_back(make_copy(c.get<std::string>(), default_seed));
            continue;
        }
        if (!c.is_object() || !c.contains("graph"))
            throw Error(ErrorKind::ParseError, "family copy must be a string or {graph, roots}");
        std::string expr = c["graph"].get<std::string>();
        Graph g = parse_graph_expr(expr, default_seed);
        std::vector<int> roots;
        const auto& r = c.contains("roots") ? c["roots"] : json("all");
        if (r.is_string()) {
            std::string kind = r.get<std::string>();
            if (kind == "all") roots = all_roots(g);
            else if (kind == "leaves") roots = leaves(g);
            else throw Error(ErrorKind::ParseError, "roots must be \"all\", \"leaves\" or a list");
        } else if (r.is_array()) {
            for (const auto& id : r) {
                int v = id.get<int>();
                if (v < 0 || v >= g.n())
                    throw Error(ErrorKind::InvalidVertex,
                                "root " + std::to_string(v) + " in family copy " + expr);
                roots.push_back(v);
            }
        } else {
            throw Error(ErrorKind::ParseError, "roots must be \"all\", \"leaves\" or a list");
        }
        fam.copies.push_back(CopySpec{expr, std::move(g), std::move(roots)});
    }
    return fam;
}

InstanceFamily load_family_file(const std::string& path, std::uint64_t default_seed) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open family file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_json(buf.str(), default_seed);
}

InstanceFamily default_family(bool with_degenerate_bases) {
    InstanceFamily fam;
    fam.max_product_size = 30;

    auto add_base = [&fam](const std::string& expr) {
        fam.bases.emplace_back(expr, parse_graph_expr(expr));
    };
    for (int t = 3; t <= 6; ++t) add_base("path(" + std::to_string(t) + ")");
    for (int t = 3; t <= 6; ++t) add_base("cycle(" + std::to_string(t) + ")");
    for (int t = 3; t <= 5; ++t) add_base("complete(" + std::to_string(t) + ")");
    add_base("star(3)");
    add_base("star(4)");

    // ten seeded draws cycling over (n, p) in {4,5,6} x {0.3, 0.5}; draws
    // whose max degree dips below 2 are left out
    const int orders[] = {4, 5, 6};
    const double probs[] = {0.3, 0.5};
    for (int seed = 1; seed <= 10; ++seed) {
        int combo = (seed - 1) % 6;
        int n = orders[combo % 3];
        double p = probs[combo / 3];
        std::ostringstream expr;
        expr << "random(" << n << "," << p << "," << seed << ")";
        Graph g = parse_graph_expr(expr.str());
        if (max_degree(g) >= 2) fam.bases.emplace_back(expr.str(), std::move(g));
    }

    if (with_degenerate_bases) {
        add_base("path(2)");
        add_base("empty(3)");
    }

    for (const char* expr :
         {"complete(1)", "complete(2)", "empty(2)", "path(2)", "path(3)", "path(4)", "path(5)",
          "cycle(3)", "cycle(4)", "cycle(5)", "star(2)", "star(3)", "join(complete(1),path(3))"})
        fam.copies.push_back(make_copy(expr, 0));

    return fam;
}

} // namespace itdom
