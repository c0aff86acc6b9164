#pragma once

#include <optional>
#include <string>

#include "itdom/graph.hpp"

namespace itdom {

// Which of the three closed-form values gamma_I(base o copy) takes:
//   Full    -> n(G) * gamma_I(H)
//   Gamma   -> n(G) * (gamma_I(H) - 1) + gamma(G)
//   Italian -> n(G) * (gamma_I(H) - 1) + gamma_I(G)
//   Tie     -> gamma(G) == gamma_I(G), the latter two coincide
enum class ValueCase { Full, Gamma, Italian, Tie };

// Structural facts that force the Full case outright.
enum class ShortcutTag { StrongSupport, Forced2Neighbor, NeverOneRoot };

const char* to_string(ValueCase c);
const char* to_string(ShortcutTag t);

struct ClassificationEvidence {
    int m = 0;                        // gamma_I(copy)
    std::optional<int> m_prime;       // gamma_I(copy - root), when computed
    std::optional<int> gamma_g;
    std::optional<int> gamma_i_g;
    std::optional<bool> cond_i;       // optimal function on copy - root positive near the root
    std::optional<bool> cond_ii;      // optimal function on copy with value 2 at the root
    std::optional<ShortcutTag> shortcut_used;
    std::string note;
};

struct Classification {
    ValueCase case_tag = ValueCase::Full;
    int value = 0;
    ClassificationEvidence evidence;
};

// Computes gamma_I(base o_root copy) from solves on base, copy and
// copy - root only, never on the product. Requires max_degree(base) >= 2
// (DegenerateBase otherwise); callers fall back to an exact product solve
// for smaller maximum degree.
Classification classify(const Graph& base, const Graph& copy, int root);

// gamma_I(G o K2) = n(G) + gamma(G); holds for every base.
int rooted_value_k2(const Graph& base);

// The three-way split when gamma_I(copy) = 2: n+gamma for K2, n+gamma_I for
// the edgeless pair, 2n otherwise. PreconditionFailed unless gamma_I = 2.
int value_when_gamma_i_h_is_2(const Graph& base, const Graph& copy, int root);

// Path copies: n * ceil((t+1)/2) for odd t or an interior root,
// n * ceil(t/2) + gamma(G) for even t rooted at a leaf.
int rooted_path_value(const Graph& base, int t, bool root_is_leaf);

// Cycle copies: n * ceil(t/2) for any root.
int rooted_cycle_value(const Graph& base, int t);

// Corona: n + gamma(G) when the copy is a single vertex, 2n otherwise.
int corona_value(const Graph& base, const Graph& copy);

// Checks the three structural conditions that guarantee the Full case:
// the root is a strong support vertex, the root has a neighbor labeled 2 by
// every optimal function, or no optimal function labels the root 1. The
// latter two also need max_degree(base) >= 2 to apply.
std::optional<ShortcutTag> shortcut_full_case(const Graph& copy, int root);

} // namespace itdom
