#pragma once

#include <memory>
#include <vector>

#include "itdom/graph.hpp"
#include "itdom/solver.hpp"
#include "itdom/weight_function.hpp"

namespace itdom {

// Bijection between (base vertex x, copy vertex u) and product vertex ids.
// The scheme is fixed to x * copy_n + u so copy restrictions are plain index
// slices and outputs are reproducible.
struct ProductLabeling {
    int base_n = 0;
    int copy_n = 0;

    int forward(int x, int u) const { return x * copy_n + u; }
    std::pair<int, int> inverse(int p) const { return {p / copy_n, p % copy_n}; }
};

// Rooted product of a base graph and a copy graph at a chosen root: one copy
// per base vertex, the root of copy x identified with x, base edges running
// between roots. Immutable; values share a memo for the two solver facts the
// diagnostics keep asking for.
class RootedProduct {
public:
    RootedProduct(Graph product, Graph base, Graph copy, int root);

    const Graph& product() const { return product_; }
    const Graph& base() const { return base_; }
    const Graph& copy() const { return copy_; }
    int root() const { return root_; }
    const ProductLabeling& labeling() const { return labeling_; }

    int base_n() const { return base_.n(); }
    int copy_n() const { return copy_.n(); }

    // gamma_I of the copy graph, solved on first use and cached.
    int copy_gamma_i() const;
    // Exact solve of the whole product, cached likewise.
    SolveResult product_italian() const;

private:
    struct Cache;

    Graph product_;
    Graph base_;
    Graph copy_;
    int root_;
    ProductLabeling labeling_;
    std::shared_ptr<Cache> cache_;
};

RootedProduct rooted_product(const Graph& base, const Graph& copy, int root);

// Disjoint union plus all edges between the parts; a's vertices keep their
// ids, b's are shifted by n(a).
Graph join(const Graph& a, const Graph& b);

// Corona product, built as the rooted product with copy K1 + h rooted at
// the apex.
Graph corona(const Graph& g, const Graph& h);

// Restriction of a product labeling to copy x; with drop_root the root
// position is omitted and the rest re-indexed like remove_vertex does.
WeightFunction restrict_to_copy(const WeightFunction& f, const RootedProduct& rp, int x,
                                bool drop_root);

// Split of the base vertices of an optimal product labeling by copy weight
// against m = gamma_I(copy): heavy copies weigh at least m, light copies
// exactly m - 1. Heavy copies are bucketed further by the root's label and
// whether the copy weight is m or m + 1; anything outside those four shapes
// lands in heavy_other.
struct CopyWeightPartition {
    int m = 0;
    std::vector<int> copy_weights;  // indexed by base vertex
    std::vector<int> heavy;
    std::vector<int> light;
    std::vector<int> heavy_0_at_m;
    std::vector<int> heavy_1_at_m;
    std::vector<int> heavy_2_at_m;
    std::vector<int> heavy_2_above_m;
    std::vector<int> heavy_other;
};

// Requires f to be optimal for the product (checked by weight equality).
CopyWeightPartition partition_copies_by_weight(const RootedProduct& rp, const WeightFunction& f);

} // namespace itdom
