#include "itdom/products.hpp"

#include <mutex>
#include <optional>

namespace itdom {

struct RootedProduct::Cache {
    std::mutex mu;
    std::optional<int> copy_gamma_i;
    std::optional<SolveResult> product_italian;
};

RootedProduct::RootedProduct(Graph product, Graph base, Graph copy, int root)
    : product_(std::move(product)), base_(std::move(base)), copy_(std::move(copy)), root_(root),
      labeling_{base_.n(), copy_.n()}, cache_(std::make_shared<Cache>()) {}

int RootedProduct::copy_gamma_i() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->copy_gamma_i) cache_->copy_gamma_i = italian_domination_number(copy_).value;
    return *cache_->copy_gamma_i;
}

SolveResult RootedProduct::product_italian() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->product_italian) cache_->product_italian = italian_domination_number(product_);
    return *cache_->product_italian;
}

RootedProduct rooted_product(const Graph& base, const Graph& copy, int root) {
    if (base.n() < 1 || copy.n() < 1)
        throw Error(ErrorKind::PreconditionFailed, "rooted product needs nonempty factors");
    if (root < 0 || root >= copy.n())
        throw Error(ErrorKind::InvalidVertex, "root " + std::to_string(root) +
                                                  " not a vertex of the copy graph");
    ProductLabeling lab{base.n(), copy.n()};
    std::vector<std::pair<int, int>> edges;
    auto copy_edges = copy.edges();
    for (int x = 0; x < base.n(); ++x)
        for (auto [a, b] : copy_edges) edges.emplace_back(lab.forward(x, a), lab.forward(x, b));
    for (auto [x, y] : base.edges())
        edges.emplace_back(lab.forward(x, root), lab.forward(y, root));
    Graph product(base.n() * copy.n(), edges);
    return RootedProduct(std::move(product), base, copy, root);
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, w] : b.edges()) edges.emplace_back(a.n() + u, a.n() + w);
    for (int u = 0; u < a.n(); ++u)
        for (int w = 0; w < b.n(); ++w) edges.emplace_back(u, a.n() + w);
    return Graph(a.n() + b.n(), edges);
}

Graph corona(const Graph& g, const Graph& h) {
    if (g.n() < 1)
        throw Error(ErrorKind::PreconditionFailed, "corona needs a nonempty base");
    return rooted_product(g, join(complete(1), h), 0).product();
}

WeightFunction restrict_to_copy(const WeightFunction& f, const RootedProduct& rp, int x,
                                bool drop_root) {
    if (f.size() != rp.product().n())
        throw Error(ErrorKind::ShapeError, "labeling not sized for the product");
    if (x < 0 || x >= rp.base_n())
        throw Error(ErrorKind::InvalidVertex, "base vertex " + std::to_string(x));
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(rp.copy_n()) - (drop_root ? 1 : 0));
    for (int u = 0; u < rp.copy_n(); ++u) {
        if (drop_root && u == rp.root()) continue;
        values.push_back(f[rp.labeling().forward(x, u)]);
    }
    return WeightFunction(std::move(values));
}

CopyWeightPartition partition_copies_by_weight(const RootedProduct& rp, const WeightFunction& f) {
    if (f.size() != rp.product().n())
        throw Error(ErrorKind::ShapeError, "labeling not sized for the product");
    if (f.weight() != rp.product_italian().value)
        throw Error(ErrorKind::NotOptimalWitness,
                    "weight " + std::to_string(f.weight()) + " != gamma_I(product) = " +
                        std::to_string(rp.product_italian().value));

    CopyWeightPartition out;
    out.m = rp.copy_gamma_i();
    out.copy_weights.resize(static_cast<std::size_t>(rp.base_n()));
    for (int x = 0; x < rp.base_n(); ++x) {
        int w = restrict_to_copy(f, rp, x, false).weight();
        out.copy_weights[static_cast<std::size_t>(x)] = w;
        if (w == out.m - 1) {
            out.light.push_back(x);
            continue;
        }
        if (w < out.m - 1) continue; // impossible for a truly optimal f; surfaces in checks
        out.heavy.push_back(x);
        int root_value = f[rp.labeling().forward(x, rp.root())];
        if (w == out.m && root_value == 0)
            out.heavy_0_at_m.push_back(x);
        else if (w == out.m && root_value == 1)
            out.heavy_1_at_m.push_back(x);
        else if (w == out.m && root_value == 2)
            out.heavy_2_at_m.push_back(x);
        else if (w == out.m + 1 && root_value == 2)
            out.heavy_2_above_m.push_back(x);
        else
            out.heavy_other.push_back(x);
    }
    return out;
}

} // namespace itdom
