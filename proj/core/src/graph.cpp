#include "itdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

namespace itdom {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotOptimalWitness: return "NotOptimalWitness";
    case ErrorKind::EnumTooLarge: return "EnumTooLarge";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "Error";
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0)
        throw Error(ErrorKind::TooSmall, "vertex count must be non-negative");
    if (n > kMaxVertices)
        throw Error(ErrorKind::TooLarge,
                    "graph has " + std::to_string(n) + " vertices, cap is " +
                        std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, w] : edges) {
        if (u < 0 || u >= n || w < 0 || w >= n)
            throw Error(ErrorKind::InvalidEdge,
                        "endpoint of (" + std::to_string(u) + "," + std::to_string(w) +
                            ") out of range for n=" + std::to_string(n));
        if (u == w)
            throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << w;
        adj_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorKind::InvalidVertex,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbors(int v) const {
    std::uint64_t m = neighbor_mask(v);
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

bool Graph::has_edge(int u, int w) const {
    check_vertex(w);
    return (neighbor_mask(u) >> w) & 1;
}

int Graph::edge_count() const {
    int total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = adj_[static_cast<std::size_t>(u)] >> u >> 1; // neighbors above u
        while (m) {
            out.emplace_back(u, u + 1 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

std::uint64_t Graph::all_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

Graph path(int t) {
    if (t < 1) throw Error(ErrorKind::TooSmall, "path needs t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    return Graph(t, edges);
}

Graph cycle(int t) {
    if (t < 3) throw Error(ErrorKind::TooSmall, "cycle needs t >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(t - 1, 0);
    return Graph(t, edges);
}

Graph complete(int t) {
    if (t < 1) throw Error(ErrorKind::TooSmall, "complete needs t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < t; ++u)
        for (int w = u + 1; w < t; ++w) edges.emplace_back(u, w);
    return Graph(t, edges);
}

Graph empty_graph(int t) {
    if (t < 0) throw Error(ErrorKind::TooSmall, "empty_graph needs t >= 0");
    return Graph(t, {});
}

Graph star(int k) {
    if (k < 1) throw Error(ErrorKind::TooSmall, "star needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, edges);
}

RemovedVertex remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw Error(ErrorKind::InvalidVertex, "cannot remove vertex " + std::to_string(v));
    std::vector<int> old_to_new(static_cast<std::size_t>(g.n()), -1);
    for (int u = 0; u < g.n(); ++u)
        if (u != v) old_to_new[static_cast<std::size_t>(u)] = u < v ? u : u - 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v)
            edges.emplace_back(old_to_new[static_cast<std::size_t>(a)],
                               old_to_new[static_cast<std::size_t>(b)]);
    return RemovedVertex{Graph(g.n() - 1, edges), std::move(old_to_new)};
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<int> leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> strong_supports(const Graph& g) {
    std::uint64_t leaf_mask = 0;
    for (int v : leaves(g)) leaf_mask |= std::uint64_t{1} << v;
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (std::popcount(g.neighbor_mask(v) & leaf_mask) >= 2) out.push_back(v);
    return out;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::uint64_t in_set = 0;
    for (int v : s) {
        if (v < 0 || v >= g.n())
            throw Error(ErrorKind::InvalidVertex, "set member " + std::to_string(v));
        in_set |= std::uint64_t{1} << v;
    }
    for (int v = 0; v < g.n(); ++v) {
        if ((in_set >> v) & 1) continue;
        if ((g.neighbor_mask(v) & in_set) == 0) return false;
    }
    return true;
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue; // blank or comment-only line
            int count = 0;
            std::string extra;
            if (tag != "n" || !(ls >> count) || count < 0 || (ls >> extra))
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(line_no) + ": expected 'n <count>'");
            n = count;
            continue;
        }
        int u = 0, w = 0;
        std::string extra;
        if (!(ls >> u)) continue;
        if (!(ls >> w) || (ls >> extra))
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + ": expected 'u w'");
        if (u < 0 || u >= n || w < 0 || w >= n)
            throw Error(ErrorKind::InvalidEdge,
                        "line " + std::to_string(line_no) + ": endpoint out of range");
        if (u == w)
            throw Error(ErrorKind::LoopRejected, "line " + std::to_string(line_no) + ": loop");
        edges.emplace_back(u, w);
    }
    if (n < 0) throw Error(ErrorKind::ParseError, "missing 'n <count>' header line");
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (auto [u, w] : g.edges()) out << u << " " << w << "\n";
    return out.str();
}

} // namespace itdom
