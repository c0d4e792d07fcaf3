#include "gcol/gen.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

Graph gen_gnp(int n, double prob, Rng& rng) {
    if (n < 0 || prob < 0.0 || prob > 1.0) throw std::invalid_argument("gen_gnp: bad parameters");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(prob)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_bipartite(int a, int b, double prob, Rng& rng) {
    if (a < 0 || b < 0 || prob < 0.0 || prob > 1.0)
        throw std::invalid_argument("gen_bipartite: bad parameters");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (rng.bernoulli(prob)) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph gen_degenerate(int n, int d, Rng& rng) {
    if (n < 0 || d < 0) throw std::invalid_argument("gen_degenerate: bad parameters");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    for (int v = 1; v < n; ++v) {
        pool.resize(v);
        for (int u = 0; u < v; ++u) pool[u] = u;
        int take = std::min(d, v);
        for (int t = 0; t < take; ++t) {
            int pick = t + rng.next_int(v - t);
            std::swap(pool[t], pool[pick]);
            edges.emplace_back(pool[t], v);
        }
    }
    return Graph(n, edges);
}

Graph gen_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph gen_star(int n) {
    if (n < 1) throw std::invalid_argument("gen_star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph gen_path(int n) {
    if (n < 0) throw std::invalid_argument("gen_path: bad n");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

} // namespace gcol
