#ifndef SIGSPEC_NETSTATS_HPP
#define SIGSPEC_NETSTATS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sigspec {

enum class FitMode {
    FixedIntercept,  // log d_r ~ q log r + log d_1, intercept pinned to log d_1
    FreeIntercept,   // ordinary least squares of log d_r on log r
};

/// Rank/degree power-law fit over the top_k largest degrees.
struct DegreeFit {
    double exponent = 0.0;
    int top_k = 0;
    FitMode mode = FitMode::FixedIntercept;
    double intercept = 0.0;  // log of the fitted degree at rank 1
};

/// Fits log d_r against log r for ranks 1..top_k, degrees sorted descending.
/// Requires top_k >= 2 and at least top_k strictly positive degrees.
DegreeFit rank_degree_fit(std::vector<double> degrees, int top_k, FitMode mode);

/// Aggregates over `sims` seeded simulations: generate_spectrum ->
/// induce_network -> degrees -> fixed-intercept rank fit + distance metrics.
/// Stds are population standard deviations over the simulations.
struct EnsembleStats {
    int sims = 0;
    double exponent_mean = 0.0, exponent_std = 0.0;
    double avg_dist_mean = 0.0, avg_dist_std = 0.0;
    double max_dist_mean = 0.0, max_dist_std = 0.0;
    double component_size_mean = 0.0;
    std::vector<double> rank_log_degree_mean;  // ranks 1..top_k
    std::vector<double> rank_log_degree_std;
    std::vector<int> max_dist_per_sim;
};

/// Simulation s uses sub-seed seed + s; results are independent of any
/// execution order. Errors from constituent steps propagate.
EnsembleStats ensemble_experiment(int nodes, int dims, double prob, int sims, int top_k,
                                  std::uint64_t seed);

/// "rank,mean_log_degree,std_log_degree" rows for ranks 1..top_k.
std::string rank_csv(const EnsembleStats& stats);

}  // namespace sigspec

#endif
