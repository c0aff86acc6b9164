#include "itdom/random_graph.hpp"

#include <random>

namespace itdom {

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw Error(ErrorKind::PreconditionFailed, "edge probability outside [0,1]");
    std::mt19937_64 eng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            double r = static_cast<double>(eng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(u, w);
        }
    }
    return Graph(n, edges);
}

} // namespace itdom
