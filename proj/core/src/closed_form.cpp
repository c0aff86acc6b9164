#include "itdom/closed_form.hpp"

#include <algorithm>

#include "itdom/solver.hpp"

namespace itdom {

const char* to_string(ValueCase c) {
    switch (c) {
    case ValueCase::Full: return "full";
    case ValueCase::Gamma: return "gamma";
    case ValueCase::Italian: return "italian";
    case ValueCase::Tie: return "tie";
    }
    return "?";
}

const char* to_string(ShortcutTag t) {
    switch (t) {
    case ShortcutTag::StrongSupport: return "strong-support";
    case ShortcutTag::Forced2Neighbor: return "forced-2-neighbor";
    case ShortcutTag::NeverOneRoot: return "never-1-root";
    }
    return "?";
}

Classification classify(const Graph& base, const Graph& copy, int root) {
    if (copy.n() == 0)
        throw Error(ErrorKind::InvalidVertex, "copy graph is empty");
    if (root < 0 || root >= copy.n())
        throw Error(ErrorKind::InvalidVertex, "root " + std::to_string(root));
    if (max_degree(base) < 2)
        throw Error(ErrorKind::DegenerateBase,
                    "max degree of the base is below 2; solve the explicit product instead");

    const int n = base.n();
    Classification out;

    if (copy.n() == 1) {
        // single-vertex copy: the product is the base graph itself
        int gamma_g = domination_number(base).value;
        int gamma_i_g = italian_domination_number(base).value;
        out.evidence.m = 1;
        out.evidence.gamma_g = gamma_g;
        out.evidence.gamma_i_g = gamma_i_g;
        out.evidence.note = "copy is a single vertex; product is the base graph";
        out.case_tag = gamma_g == gamma_i_g ? ValueCase::Tie : ValueCase::Italian;
        out.value = gamma_i_g;
        return out;
    }

    const int m = italian_domination_number(copy).value;
    out.evidence.m = m;

    // A strong-support root settles the case without solving copy - root.
    auto supports = strong_supports(copy);
    if (std::find(supports.begin(), supports.end(), root) != supports.end()) {
        out.evidence.shortcut_used = ShortcutTag::StrongSupport;
        out.case_tag = ValueCase::Full;
        out.value = n * m;
        return out;
    }

    auto removed = remove_vertex(copy, root);
    const int m_prime = italian_domination_number(removed.graph).value;
    out.evidence.m_prime = m_prime;

    if (m_prime >= m) {
        out.case_tag = ValueCase::Full;
        out.value = n * m;
        return out;
    }

    // m_prime == m - 1 from here on
    int gamma_g = domination_number(base).value;
    int gamma_i_g = italian_domination_number(base).value;
    out.evidence.gamma_g = gamma_g;
    out.evidence.gamma_i_g = gamma_i_g;

    if (gamma_g == gamma_i_g) {
        out.case_tag = ValueCase::Tie;
        out.value = n * (m - 1) + gamma_g;
        return out;
    }

    // root neighborhood translated into copy - root ids
    std::vector<int> shifted_neighbors;
    for (int y : copy.neighbors(root))
        shifted_neighbors.push_back(removed.old_to_new[static_cast<std::size_t>(y)]);

    bool cond_i =
        exists_optimal_idf_with(removed.graph, Constraint::positive_at_some(shifted_neighbors));
    bool cond_ii = exists_optimal_idf_with(copy, Constraint::value_at(root, 2));
    out.evidence.cond_i = cond_i;
    out.evidence.cond_ii = cond_ii;

    if (cond_i || cond_ii) {
        out.case_tag = ValueCase::Gamma;
        out.value = n * (m - 1) + gamma_g;
    } else {
        out.case_tag = ValueCase::Italian;
        out.value = n * (m - 1) + gamma_i_g;
    }
    return out;
}

int rooted_value_k2(const Graph& base) {
    if (base.n() < 1) throw Error(ErrorKind::PreconditionFailed, "empty base");
    return base.n() + domination_number(base).value;
}

int value_when_gamma_i_h_is_2(const Graph& base, const Graph& copy, int root) {
    if (root < 0 || root >= copy.n())
        throw Error(ErrorKind::InvalidVertex, "root " + std::to_string(root));
    if (italian_domination_number(copy).value != 2)
        throw Error(ErrorKind::PreconditionFailed, "copy graph needs gamma_I = 2");
    if (copy.n() == 2 && copy.edge_count() == 1) return base.n() + domination_number(base).value;
    if (copy.n() == 2 && copy.edge_count() == 0)
        return base.n() + italian_domination_number(base).value;
    return 2 * base.n();
}

int rooted_path_value(const Graph& base, int t, bool root_is_leaf) {
    if (t < 2) throw Error(ErrorKind::PreconditionFailed, "path copies need t >= 2");
    if (t % 2 == 0 && root_is_leaf)
        return base.n() * (t / 2) + domination_number(base).value;
    return base.n() * ((t + 2) / 2); // ceil((t+1)/2)
}

int rooted_cycle_value(const Graph& base, int t) {
    if (t < 3) throw Error(ErrorKind::PreconditionFailed, "cycle copies need t >= 3");
    return base.n() * ((t + 1) / 2);
}

int corona_value(const Graph& base, const Graph& copy) {
    if (base.n() < 1 || copy.n() < 1)
        throw Error(ErrorKind::PreconditionFailed, "corona value needs nonempty factors");
    if (copy.n() == 1) return base.n() + domination_number(base).value;
    return 2 * base.n();
}

std::optional<ShortcutTag> shortcut_full_case(const Graph& copy, int root) {
    if (root < 0 || root >= copy.n())
        throw Error(ErrorKind::InvalidVertex, "root " + std::to_string(root));
    auto supports = strong_supports(copy);
    if (std::find(supports.begin(), supports.end(), root) != supports.end())
        return ShortcutTag::StrongSupport;
    for (int u : copy.neighbors(root))
        if (optimal_values_at(copy, u) == std::set<int>{2}) return ShortcutTag::Forced2Neighbor;
    if (!optimal_values_at(copy, root).contains(1)) return ShortcutTag::NeverOneRoot;
    return std::nullopt;
}

} // namespace itdom
