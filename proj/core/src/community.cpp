#include "sigspec/community.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sigspec {

ModularityScores modularity_scores(const Graph& g, bool symmetrize) {
    int n = g.node_count();
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.neighbors(u)) {
            e(u, v) = w;
            if (!g.directed()) e(v, u) = w;
        }
    double total = e.sum();
    if (total == 0.0) throw std::invalid_argument("total edge weight is zero");

    Eigen::VectorXd out_strength = e.rowwise().sum();
    Eigen::VectorXd in_strength = e.colwise().sum();
    ModularityScores scores;
    scores.total_weight = total;
    scores.values = e / total - (out_strength * in_strength.transpose()) / (total * total);
    if (symmetrize) scores.values = ((scores.values + scores.values.transpose()) / 2.0).eval();
    return scores;
}

double modularity(const ModularityScores& scores, const Partition& p) {
    int n = scores.node_count();
    if (static_cast<int>(p.assignment.size()) != n)
        throw std::invalid_argument("partition does not cover the score matrix");
    std::vector<std::vector<int>> members(p.count);
    for (int j = 0; j < n; ++j) {
        int c = p.assignment[j];
        if (c < 0 || c >= p.count) throw std::invalid_argument("community id out of range");
        members[c].push_back(j);
    }
    double q = 0.0;
    for (const auto& group : members)
        for (int i : group)
            for (int j : group) q += scores.values(i, j);
    return q;
}

FitReport project_modularity(const Graph& g, int dims, double tol, int max_iter) {
    ModularityScores scores = modularity_scores(g);
    return fit_symmetric(scores.values, dims, /*gram=*/true, /*fit_diagonal=*/false, tol, max_iter);
}

Partition sign_bipartition(const SpectrumWeights& w) {
    if (!w.undirected) throw std::invalid_argument("sign bipartition requires undirected weights");
    if (w.dim_count() < 1) throw std::invalid_argument("weights need at least one dimension");
    Partition p;
    p.assignment.resize(w.node_count());
    bool has_pos = false, has_rest = false;
    for (int j = 0; j < w.node_count(); ++j) {
        bool pos = w.outgoing(j, 0) > 0.0;
        p.assignment[j] = pos ? 0 : 1;
        (pos ? has_pos : has_rest) = true;
    }
    if (has_pos && has_rest) {
        p.count = 2;
    } else {
        std::fill(p.assignment.begin(), p.assignment.end(), 0);
        p.count = w.node_count() > 0 ? 1 : 0;
    }
    return p;
}

namespace {

void compact_ids(Partition& p) {
    std::vector<int> remap(p.count, -1);
    int next = 0;
    for (int& c : p.assignment) {
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
    p.count = next;
}

double clusters_objective(const SpectrumWeights& w, const std::vector<int>& assignment,
                          int clusters) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(clusters, w.dim_count());
    for (int j = 0; j < w.node_count(); ++j) sums.row(assignment[j]) += w.outgoing.row(j);
    return sums.rowwise().squaredNorm().sum();
}

}  // namespace

Partition cluster_once(const SpectrumWeights& w, int clusters, std::uint64_t seed,
                       std::vector<MoveRecord>* trace) {
    if (!w.undirected) throw std::invalid_argument("projection clustering requires undirected weights");
    int n = w.node_count();
    if (clusters < 1 || clusters > n) throw std::invalid_argument("clusters out of range");

    std::mt19937_64 rng(seed);
    std::vector<int> assignment(n);
    for (int j = 0; j < n; ++j)
        assignment[j] = static_cast<int>(rng() % static_cast<std::uint64_t>(clusters));

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(clusters, w.dim_count());
    for (int j = 0; j < n; ++j) sums.row(assignment[j]) += w.outgoing.row(j);
    if (trace) trace->push_back({0.0, clusters_objective(w, assignment, clusters)});

    // Exact delta of sum_c |S_c|^2 for moving j from a to b:
    //   |S_b + w_j|^2 - |S_b|^2 + |S_a - w_j|^2 - |S_a|^2
    // = 2 S_b . w_j - 2 S_a . w_j + 2 |w_j|^2
    // Each accepted move strictly raises the objective, so the sweep loop
    // terminates; the cap only guards against float-rounding pathologies.
    bool moved = true;
    for (long sweep = 0; moved && sweep < 1000; ++sweep) {
        moved = false;
        for (int j = 0; j < n; ++j) {
            int from = assignment[j];
            const auto wj = w.outgoing.row(j);
            double base = 2.0 * wj.squaredNorm() - 2.0 * sums.row(from).dot(wj);
            double best_delta = 0.0;
            int best_to = from;
            for (int b = 0; b < clusters; ++b) {
                if (b == from) continue;
                double delta = 2.0 * sums.row(b).dot(wj) + base;
                if (delta > best_delta) {
                    best_delta = delta;
                    best_to = b;
                }
            }
            if (best_to != from) {
                sums.row(from) -= wj;
                sums.row(best_to) += wj;
                assignment[j] = best_to;
                moved = true;
                if (trace)
                    trace->push_back(
                        {best_delta, clusters_objective(w, assignment, clusters)});
            }
        }
    }

    Partition p;
    p.assignment = std::move(assignment);
    p.count = clusters;
    compact_ids(p);
    return p;
}

Detection cluster_projection(const SpectrumWeights& w, int clusters, int restarts,
                             std::uint64_t seed, const ModularityScores& scores) {
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (scores.node_count() != w.node_count())
        throw std::invalid_argument("scores and weights sizes differ");

    Detection best;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        Partition p = cluster_once(w, clusters, seed + static_cast<std::uint64_t>(r));
        double q = modularity(scores, p);
        if (!have_best || q > best.score) {
            best.partition = std::move(p);
            best.score = q;
            best.best_restart = r;
            have_best = true;
        }
    }
    best.projected_score =
        clusters_objective(w, best.partition.assignment, best.partition.count);
    return best;
}

Detection detect(const Graph& g, int dims, int clusters, int restarts, std::uint64_t seed) {
    ModularityScores scores = modularity_scores(g);
    FitReport fit = project_modularity(g, dims);
    if (dims == 1) {
        Detection result;
        result.partition = sign_bipartition(fit.weights);
        result.score = modularity(scores, result.partition);
        result.projected_score =
            clusters_objective(fit.weights, result.partition.assignment, result.partition.count);
        result.best_restart = -1;
        return result;
    }
    return cluster_projection(fit.weights, clusters, restarts, seed, scores);
}

std::vector<int> community_sizes(const Partition& p) {
    std::vector<int> sizes(p.count, 0);
    for (int c : p.assignment) ++sizes[c];
    return sizes;
}

std::string save_partition(const Partition& p, const Graph& g) {
    if (static_cast<int>(p.assignment.size()) != g.node_count())
        throw std::invalid_argument("partition does not cover the graph");
    std::string out;
    for (int j = 0; j < g.node_count(); ++j) {
        out += g.label(j);
        out += '\t';
        out += std::to_string(p.assignment[j]);
        out += '\n';
    }
    return out;
}

}  // namespace sigspec
