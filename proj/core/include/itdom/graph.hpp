#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "itdom/error.hpp"

namespace itdom {

// Vertex ids are plain ints in [0, n) of a specific Graph.
using VertexId = int;

// Simple undirected graph on vertices 0..n-1, value-immutable after
// construction. Adjacency is one 64-bit neighbor mask per vertex, which caps
// the order at 64; exact domination solving beyond that is out of reach
// anyway. Disconnected graphs (including n = 0) are fully supported.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    std::uint64_t neighbor_mask(int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int w) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // each edge once, u < w
    std::uint64_t all_mask() const;                 // low n bits set

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Builds a graph from an edge list. Endpoints out of range throw InvalidEdge,
// loops throw LoopRejected, duplicate edges are merged.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Standard small graphs with canonical labelings: path vertices 0..t-1 in
// order, cycle(t) closes the edge (t-1, 0), star(k) has its center at 0.
Graph path(int t);
Graph cycle(int t);
Graph complete(int t);
Graph empty_graph(int t);
Graph star(int k);

struct RemovedVertex {
    Graph graph;
    // old_to_new[u] is u's id in the smaller graph, -1 for the removed vertex.
    std::vector<int> old_to_new;
};

// Deletes v and re-indexes the remaining vertices in order.
RemovedVertex remove_vertex(const Graph& g, int v);

int max_degree(const Graph& g);
std::vector<int> leaves(const Graph& g);           // degree-1 vertices
std::vector<int> strong_supports(const Graph& g);  // vertices with >= 2 leaf neighbors
bool is_dominating_set(const Graph& g, const std::vector<int>& s);

// Text format: first line "n <count>", then one "u w" edge per line.
// '#' starts a comment, blank lines are ignored.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

} // namespace itdom
