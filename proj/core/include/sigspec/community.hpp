#ifndef SIGSPEC_COMMUNITY_HPP
#define SIGSPEC_COMMUNITY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigspec/graph.hpp"
#include "sigspec/wssm.hpp"

namespace sigspec {

/// Per-pair modularity scores values(i, j) = e_ij / T - k_out(i) k_in(j) / T^2,
/// symmetrized, with T the total edge weight over both orientations. The
/// matrix sums to zero.
struct ModularityScores {
    Eigen::MatrixXd values;
    double total_weight = 0.0;

    int node_count() const { return static_cast<int>(values.rows()); }
};

/// Node -> community assignment with dense ids 0..count-1.
struct Partition {
    std::vector<int> assignment;
    int count = 0;
};

/// Throws when the total weight is zero. Pass symmetrize = false to keep the
/// raw directed scores (the total modularity of any partition is unchanged).
ModularityScores modularity_scores(const Graph& g, bool symmetrize = true);

/// Sum of scores over all ordered same-community pairs, diagonal included.
double modularity(const ModularityScores& scores, const Partition& p);

/// Gram, diagonal-free low-rank fit of the modularity score matrix (loop
/// accuracy is irrelevant to the objective, so the diagonal is excluded).
/// The iteration budget is deliberately large: the alternating fit must run
/// to tol-convergence for the projection to rank partitions faithfully.
FitReport project_modularity(const Graph& g, int dims, double tol = 1e-9, int max_iter = 25000);

/// d = 1 trivial split: nodes with positive first-coordinate weight against
/// the rest; collapses to a single community if either side is empty.
Partition sign_bipartition(const SpectrumWeights& w);

struct Detection {
    Partition partition;
    double score = 0.0;            // modularity on the original scores
    double projected_score = 0.0;  // sum over clusters of |cluster weight sum|^2
    int best_restart = -1;         // restart that produced the partition
};

/// Trace entry for one accepted single-node move; the first entry carries
/// the starting objective with a zero delta.
struct MoveRecord {
    double predicted_delta = 0.0;
    double objective_after = 0.0;  // recomputed from scratch
};

/// One clustering pass from a seeded uniform assignment into `clusters`
/// groups: sequential single-node moves applying the best strictly positive
/// exact delta of sum_c |w_c|^2, swept until a full pass makes no move.
/// Empty clusters are dropped and ids compacted.
Partition cluster_once(const SpectrumWeights& w, int clusters, std::uint64_t seed,
                       std::vector<MoveRecord>* trace = nullptr);

/// Best of `restarts` cluster_once passes (sub-seed = seed + restart),
/// ranked by modularity on the original scores; ties keep the earliest
/// restart.
Detection cluster_projection(const SpectrumWeights& w, int clusters, int restarts,
                             std::uint64_t seed, const ModularityScores& scores);

/// End-to-end detection: modularity scores -> diagonal-free projection ->
/// sign split when dims = 1, projection clustering otherwise.
Detection detect(const Graph& g, int dims, int clusters, int restarts, std::uint64_t seed);

std::vector<int> community_sizes(const Partition& p);

/// TSV "node_label<TAB>community_id", one row per node.
std::string save_partition(const Partition& p, const Graph& g);

}  // namespace sigspec

#endif
