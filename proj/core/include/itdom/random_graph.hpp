#pragma once

#include <cstdint>

#include "itdom/graph.hpp"

namespace itdom {

// Erdos-Renyi G(n, p) with a fully pinned-down draw so the same
// (n, p, seed) yields the same graph on every platform: an mt19937_64
// engine seeded with `seed`, pairs visited in lexicographic order (u < w),
// each kept iff (next() >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

} // namespace itdom
