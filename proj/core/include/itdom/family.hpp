#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itdom/graph.hpp"

namespace itdom {

// One copy graph together with the roots to try.
struct CopySpec {
    std::string expr;
    Graph graph;
    std::vector<int> roots;
};

// A sweep family: base graphs crossed with rooted copy graphs, subject to a
// product-size cap. Pairs over the cap are skipped, not errors.
struct InstanceFamily {
    std::vector<std::pair<std::string, Graph>> bases; // (expression, graph)
    std::vector<CopySpec> copies;
    int max_product_size = 30;
};

// Parses a generator expression:
//   path(t) cycle(t) complete(t) empty(t) star(k) random(n,p[,seed]) join(a,b)
// random() without an explicit seed uses default_seed.
Graph parse_graph_expr(const std::string& expr, std::uint64_t default_seed = 0);

// Loads a family from its JSON description:
//   { "max_product_size": 30,
//     "bases": ["cycle(4)", ...],
//     "copies": ["path(3)", {"graph": "star(3)", "roots": "leaves"},
//                {"graph": "path(4)", "roots": [0, 3]}, ...] }
// A bare string in "copies" means every vertex is tried as root.
InstanceFamily parse_family_json(const std::string& text, std::uint64_t default_seed = 0);
InstanceFamily load_family_file(const std::string& path, std::uint64_t default_seed = 0);

// The stock verification family: paths, cycles, complete graphs and stars as
// bases plus ten seeded random graphs filtered to max degree >= 2, crossed
// with small copy graphs covering leaf roots, interior roots, strong
// supports, the two-vertex graphs and a join. With degenerate bases, P2 and
// the edgeless triple join in for membership-only checks.
InstanceFamily default_family(bool with_degenerate_bases = false);

} // namespace itdom
