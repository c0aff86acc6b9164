#include "itdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace itdom {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Residual feasibility per problem. A rule answers one question about a
// 0-labeled vertex: given the value sum and 2-count over its decided
// neighbors and the number of still-undecided neighbors, can its demand
// still be met? With no undecided neighbors left this degenerates to the
// exact feasibility test.
struct ItalianRule {
    static constexpr int kMaxValue = 2;
    static bool reachable(int dsum, int /*d2*/, int undecided) {
        return dsum + 2 * undecided >= 2;
    }
};

struct RomanRule {
    static constexpr int kMaxValue = 2;
    static bool reachable(int /*dsum*/, int d2, int undecided) {
        return d2 >= 1 || undecided >= 1;
    }
};

struct DominationRule {
    static constexpr int kMaxValue = 1;
    static bool reachable(int dsum, int /*d2*/, int undecided) {
        return dsum >= 1 || undecided >= 1;
    }
};

// Depth-first branch and bound over labelings. Vertices are assigned along
// `order`, values tried ascending. Cuts:
//   (a) weight bound against the incumbent (Optimize) or the target
//       (exact-weight modes),
//   (b,c) a 0-labeled vertex whose decided neighbors plus best-case
//       undecided neighbors cannot meet its demand kills the branch.
// Exact-weight modes additionally drop branches that cannot climb back up
// to the target. Both families of cuts are exact, so enumeration at the
// optimal weight loses nothing.
template <class Rule>
class Search {
public:
    enum class Mode { Optimize, FirstAtTarget, EnumerateAtTarget };

    Search(const Graph& g, bool descending_degree)
        : n_(g.n()), adj_(static_cast<std::size_t>(n_)),
          value_(static_cast<std::size_t>(n_), -1), forced_(static_cast<std::size_t>(n_), -1),
          dsum_(static_cast<std::size_t>(n_), 0), d2_(static_cast<std::size_t>(n_), 0),
          order_(static_cast<std::size_t>(n_)) {
        for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
        std::iota(order_.begin(), order_.end(), 0);
        if (descending_degree)
            std::stable_sort(order_.begin(), order_.end(), [&g](int a, int b) {
                return g.degree(a) > g.degree(b);
            });
    }

    void force_value(int v, int c) { forced_[static_cast<std::size_t>(v)] = c; }
    void require_positive_on(std::uint64_t mask) { need_mask_ = mask; }

    // Optimize: best complete feasible weight strictly below `start_bound`,
    // or start_bound if none exists.
    int optimize(int start_bound) {
        mode_ = Mode::Optimize;
        bound_ = start_bound;
        dfs(0);
        return bound_;
    }

    // First complete feasible labeling of weight exactly `target` in DFS
    // order, if any.
    bool first_at(int target, std::vector<int>& out) {
        mode_ = Mode::FirstAtTarget;
        bound_ = target;
        bool found = false;
        sink_ = [&](const std::vector<int>& values) {
            out = values;
            found = true;
            return true;
        };
        dfs(0);
        return found;
    }

    void enumerate_at(int target, const std::function<void(const std::vector<int>&)>& fn) {
        mode_ = Mode::EnumerateAtTarget;
        bound_ = target;
        sink_ = [&](const std::vector<int>& values) {
            fn(values);
            return false;
        };
        dfs(0);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool exact_target() const { return mode_ != Mode::Optimize; }

    void dfs(int depth) {
        if (stopped_) return;
        if (depth == n_) {
            if (exact_target()) {
                if (weight_ == bound_ && sink_(value_)) stopped_ = true;
            } else {
                bound_ = weight_; // pruning guarantees weight_ < old bound
            }
            return;
        }
        int v = order_[static_cast<std::size_t>(depth)];
        int lo = 0, hi = Rule::kMaxValue;
        if (forced_[static_cast<std::size_t>(v)] >= 0)
            lo = hi = forced_[static_cast<std::size_t>(v)];
        for (int c = lo; c <= hi && !stopped_; ++c) {
            if (exact_target()) {
                if (weight_ + c > bound_) break;
                // even all-2 completions fall short: try a larger value
                if (weight_ + c + Rule::kMaxValue * (n_ - depth - 1) < bound_) continue;
            } else if (weight_ + c >= bound_) {
                break;
            }
            ++nodes_;
            apply(v, c);
            if (consistent(v, c)) dfs(depth + 1);
            undo(v, c);
        }
    }

    void apply(int v, int c) {
        value_[static_cast<std::size_t>(v)] = c;
        decided_ |= bit(v);
        weight_ += c;
        if (c == 0) {
            zeros_ |= bit(v);
        } else {
            for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
                int w = std::countr_zero(m);
                dsum_[static_cast<std::size_t>(w)] += c;
                if (c == 2) ++d2_[static_cast<std::size_t>(w)];
            }
            if (need_mask_ & bit(v)) ++need_pos_;
        }
    }

    void undo(int v, int c) {
        value_[static_cast<std::size_t>(v)] = -1;
        decided_ &= ~bit(v);
        weight_ -= c;
        if (c == 0) {
            zeros_ &= ~bit(v);
        } else {
            for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
                int w = std::countr_zero(m);
                dsum_[static_cast<std::size_t>(w)] -= c;
                if (c == 2) --d2_[static_cast<std::size_t>(w)];
            }
            if (need_mask_ & bit(v)) --need_pos_;
        }
    }

    // Re-checks every 0-labeled vertex whose slack changed when v was
    // decided: v itself (if labeled 0) and decided-0 neighbors of v.
    bool consistent(int v, int c) {
        std::uint64_t affected = adj_[static_cast<std::size_t>(v)] & zeros_;
        if (c == 0) affected |= bit(v);
        while (affected) {
            int w = std::countr_zero(affected);
            affected &= affected - 1;
            int undecided = std::popcount(adj_[static_cast<std::size_t>(w)] & ~decided_);
            if (!Rule::reachable(dsum_[static_cast<std::size_t>(w)],
                                 d2_[static_cast<std::size_t>(w)], undecided))
                return false;
        }
        if (need_mask_ && need_pos_ == 0 && (need_mask_ & ~decided_) == 0) return false;
        return true;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    Mode mode_ = Mode::Optimize;
    std::vector<int> value_;
    std::vector<int> forced_;
    std::vector<int> dsum_; // value sum over decided neighbors
    std::vector<int> d2_;   // decided neighbors labeled 2
    std::vector<int> order_;
    std::uint64_t decided_ = 0;
    std::uint64_t zeros_ = 0;
    std::uint64_t need_mask_ = 0;
    int need_pos_ = 0;
    int weight_ = 0;
    int bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::function<bool(const std::vector<int>&)> sink_;
};

// Two passes: find the optimal value branching on high-degree vertices
// first, then recover the lexicographically smallest witness by a DFS in
// natural vertex order at that exact weight. The all-ones labeling is
// feasible for all three problems, so n is a valid starting incumbent.
template <class Rule>
SolveResult solve(const Graph& g) {
    if (g.n() == 0) return SolveResult{0, WeightFunction({}), 0};

    Search<Rule> opt(g, /*descending_degree=*/true);
    int best = opt.optimize(g.n());

    Search<Rule> wit(g, /*descending_degree=*/false);
    std::vector<int> values;
    bool found = wit.first_at(best, values);
    if (!found) values.assign(static_cast<std::size_t>(g.n()), 1); // best == n

    return SolveResult{best, WeightFunction(std::move(values)), opt.nodes() + wit.nodes()};
}

int italian_value(const Graph& g) {
    if (g.n() == 0) return 0;
    Search<ItalianRule> opt(g, true);
    return opt.optimize(g.n());
}

void check_vertex_in(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw Error(ErrorKind::InvalidVertex,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(g.n()) + ")");
}

void check_sized_for(const Graph& g, const WeightFunction& f) {
    if (f.size() != g.n())
        throw Error(ErrorKind::ShapeError, "labeling of size " + std::to_string(f.size()) +
                                               " on graph of order " + std::to_string(g.n()));
}

// Constrained search for an IDF of weight exactly gamma_I(g) once the
// optimum is known.
bool exists_optimal_with(const Graph& g, const Constraint& c, int target) {
    if (c.is_value_at()) {
        check_vertex_in(g, c.vertex());
        if (c.value() < 0 || c.value() > 2)
            throw Error(ErrorKind::PreconditionFailed, "constraint value not in {0,1,2}");
    } else {
        for (int v : c.support()) check_vertex_in(g, v);
        if (c.support().empty()) return false;
    }
    Search<ItalianRule> s(g, /*descending_degree=*/true);
    if (c.is_value_at()) {
        s.force_value(c.vertex(), c.value());
    } else {
        std::uint64_t mask = 0;
        for (int v : c.support()) mask |= bit(v);
        s.require_positive_on(mask);
    }
    std::vector<int> unused;
    return s.first_at(target, unused);
}

} // namespace

std::vector<int> SolveResult::witness_set() const {
    std::vector<int> out;
    for (int v = 0; v < witness.size(); ++v)
        if (witness[v] > 0) out.push_back(v);
    return out;
}

bool is_idf(const Graph& g, const WeightFunction& f) {
    check_sized_for(g, f);
    for (int v = 0; v < g.n(); ++v) {
        if (f[v] != 0) continue;
        int sum = 0;
        for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1) sum += f[std::countr_zero(m)];
        if (sum < 2) return false;
    }
    return true;
}

bool is_rdf(const Graph& g, const WeightFunction& f) {
    check_sized_for(g, f);
    for (int v = 0; v < g.n(); ++v) {
        if (f[v] != 0) continue;
        bool covered = false;
        for (std::uint64_t m = g.neighbor_mask(v); m && !covered; m &= m - 1)
            covered = f[std::countr_zero(m)] == 2;
        if (!covered) return false;
    }
    return true;
}

SolveResult domination_number(const Graph& g) { return solve<DominationRule>(g); }
SolveResult italian_domination_number(const Graph& g) { return solve<ItalianRule>(g); }
SolveResult roman_domination_number(const Graph& g) { return solve<RomanRule>(g); }

Constraint Constraint::value_at(int vertex, int value) {
    Constraint c;
    c.vertex_ = vertex;
    c.value_ = value;
    return c;
}

Constraint Constraint::positive_at_some(std::vector<int> support) {
    Constraint c;
    c.support_ = std::move(support);
    return c;
}

void for_each_optimal_idf(const Graph& g, const std::function<void(const WeightFunction&)>& fn) {
    if (g.n() > kEnumerationCap)
        throw Error(ErrorKind::EnumTooLarge, "enumeration capped at n = " +
                                                 std::to_string(kEnumerationCap) + ", got " +
                                                 std::to_string(g.n()));
    if (g.n() == 0) {
        fn(WeightFunction({}));
        return;
    }
    int target = italian_value(g);
    Search<ItalianRule> s(g, /*descending_degree=*/false);
    s.enumerate_at(target, [&](const std::vector<int>& values) { fn(WeightFunction(values)); });
}

std::vector<WeightFunction> enumerate_optimal_idfs(const Graph& g) {
    std::vector<WeightFunction> out;
    for_each_optimal_idf(g, [&](const WeightFunction& f) { out.push_back(f); });
    return out;
}

bool exists_optimal_idf_with(const Graph& g, const Constraint& c) {
    if (g.n() == 0) {
        if (c.is_value_at()) throw Error(ErrorKind::InvalidVertex, "empty graph");
        return false; // the empty labeling is positive nowhere
    }
    return exists_optimal_with(g, c, italian_value(g));
}

std::set<int> optimal_values_at(const Graph& g, int v) {
    check_vertex_in(g, v);
    int target = italian_value(g);
    std::set<int> out;
    for (int c = 0; c <= 2; ++c)
        if (exists_optimal_with(g, Constraint::value_at(v, c), target)) out.insert(c);
    return out;
}

} // namespace itdom
