#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "itdom/graph.hpp"
#include "itdom/weight_function.hpp"

namespace itdom {

// Outcome of an exact solve. For plain domination the witness takes values
// in {0,1} and encodes the dominating set. The witness is always the
// lexicographically smallest optimal labeling in vertex order.
struct SolveResult {
    int value = 0;
    WeightFunction witness;
    std::uint64_t nodes_explored = 0;

    std::vector<int> witness_set() const; // vertices with positive value
};

// f is an Italian dominating function: every 0-vertex sees neighbor values
// summing to at least 2.
bool is_idf(const Graph& g, const WeightFunction& f);

// f is a Roman dominating function: every 0-vertex has a neighbor of value 2.
bool is_rdf(const Graph& g, const WeightFunction& f);

// Exact values by branch and bound; n = 0 yields 0 with an empty witness.
SolveResult domination_number(const Graph& g);
SolveResult italian_domination_number(const Graph& g);
SolveResult roman_domination_number(const Graph& g);

// Constraint for optimal-IDF queries: either f(vertex) == value, or f
// positive somewhere on a support set.
class Constraint {
public:
    static Constraint value_at(int vertex, int value);
    static Constraint positive_at_some(std::vector<int> support);

    bool is_value_at() const { return vertex_ >= 0; }
    int vertex() const { return vertex_; }
    int value() const { return value_; }
    const std::vector<int>& support() const { return support_; }

private:
    Constraint() = default;
    int vertex_ = -1;
    int value_ = -1;
    std::vector<int> support_;
};

// enumerate_optimal_idfs refuses graphs above this order; the set of optimal
// functions can grow exponentially.
constexpr int kEnumerationCap = 20;

// All Italian dominating functions of weight exactly gamma_I(g), each once,
// in lexicographic order of their value vectors.
std::vector<WeightFunction> enumerate_optimal_idfs(const Graph& g);
void for_each_optimal_idf(const Graph& g, const std::function<void(const WeightFunction&)>& fn);

// True iff some IDF of weight exactly gamma_I(g) satisfies the constraint.
// Runs a constrained branch and bound; no size cap beyond the graph's own.
bool exists_optimal_idf_with(const Graph& g, const Constraint& c);

// { f(v) : f is an optimal IDF on g }.
std::set<int> optimal_values_at(const Graph& g, int v);

} // namespace itdom
