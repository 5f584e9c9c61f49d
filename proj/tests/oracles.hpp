#ifndef SIGSPEC_TEST_ORACLES_HPP
#define SIGSPEC_TEST_ORACLES_HPP

// Independent reference implementations used only by the tests. They stay
// deliberately naive (enumeration, double BFS, random search) so that the
// library code they check cannot share a bug with them.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include "sigspec/community.hpp"
#include "sigspec/graph.hpp"

namespace oracles {

inline std::vector<int> bfs_hops(const std::vector<std::vector<int>>& adj, int source) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[u])
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
    }
    return dist;
}

// Classic double-BFS tree diameter.
inline int tree_diameter(const sigspec::Graph& tree) {
    if (tree.node_count() == 0) return 0;
    auto adj = tree.undirected_adjacency();
    auto d0 = bfs_hops(adj, 0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_hops(adj, far);
    return *std::max_element(d1.begin(), d1.end());
}

// Best modularity over every partition, enumerated as restricted growth
// strings. Feasible for n <= 9 or so.
inline double exhaustive_best_modularity(const sigspec::ModularityScores& scores) {
    int n = scores.node_count();
    std::vector<int> assign(n, 0);
    double best = -std::numeric_limits<double>::infinity();
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            sigspec::Partition p{assign, used};
            best = std::max(best, sigspec::modularity(scores, p));
            return;
        }
        for (int c = 0; c <= used && c < n; ++c) {
            assign[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Smallest full residual among `attempts` random rank-m factorizations.
inline double random_factorization_residual(const Eigen::MatrixXd& x, int dims, int attempts,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&]() { return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); };
    int n = static_cast<int>(x.rows());
    double best = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd a(n, dims), b(n, dims);
    for (int t = 0; t < attempts; ++t) {
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < dims; ++d) {
                a(i, d) = 4.0 * uniform() - 2.0;
                b(i, d) = 4.0 * uniform() - 2.0;
            }
        best = std::min(best, (x - a * b.transpose()).norm());
    }
    return best;
}

struct TestRng {
    std::mt19937_64 rng;
    explicit TestRng(std::uint64_t seed) : rng(seed) {}
    double uniform() { return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline sigspec::Graph random_graph(TestRng& rng, int max_nodes, double edge_prob,
                                   bool weighted, bool directed = false) {
    int n = rng.uniform_int(2, max_nodes);
    sigspec::Graph g(n, directed);
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i + 1; j < n; ++j) {
            if (i == j) continue;
            if (rng.uniform() < edge_prob) {
                double w = 1.0;
                if (weighted) {
                    w = 0.25 + 2.0 * rng.uniform();
                    if (rng.uniform() < 0.3) w = -w;
                }
                g.add_edge(i, j, w);
            }
        }
    return g;
}

inline sigspec::Graph random_connected_graph(TestRng& rng, int min_nodes, int max_nodes,
                                             double edge_prob) {
    for (;;) {
        int n = rng.uniform_int(min_nodes, max_nodes);
        sigspec::Graph g(n, false);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform() < edge_prob) g.add_edge(i, j, 1.0);
        if (g.edge_count() == 0) continue;
        auto comps = sigspec::connected_components(g);
        if (comps.sizes[0] == n) return g;
    }
}

inline sigspec::Graph random_tree(TestRng& rng, int nodes) {
    sigspec::Graph g(nodes, false);
    for (int i = 1; i < nodes; ++i) g.add_edge(rng.uniform_int(0, i - 1), i, 1.0);
    return g;
}

inline Eigen::MatrixXd random_symmetric(TestRng& rng, int n, double scale = 2.0) {
    Eigen::MatrixXd x(n, n);
    for (int i = 0; i < n; ++i) {
        x(i, i) = scale * (2.0 * rng.uniform() - 1.0);
        for (int j = i + 1; j < n; ++j) {
            x(i, j) = scale * (2.0 * rng.uniform() - 1.0);
            x(j, i) = x(i, j);
        }
    }
    return x;
}

}  // namespace oracles

#endif
