#include "sigspec/netstats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sigspec/graph.hpp"
#include "sigspec/spectrum.hpp"

namespace sigspec {

DegreeFit rank_degree_fit(std::vector<double> degrees, int top_k, FitMode mode) {
    if (top_k < 2) throw std::invalid_argument("top_k must be at least 2");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    if (static_cast<int>(degrees.size()) < top_k || degrees[top_k - 1] <= 0.0)
        throw std::invalid_argument("fewer than top_k positive degrees");

    DegreeFit fit;
    fit.top_k = top_k;
    fit.mode = mode;
    if (mode == FitMode::FixedIntercept) {
        double num = 0.0, den = 0.0;
        double log_d1 = std::log(degrees[0]);
        for (int r = 1; r <= top_k; ++r) {
            double lr = std::log(static_cast<double>(r));
            num += (std::log(degrees[r - 1]) - log_d1) * lr;
            den += lr * lr;
        }
        fit.exponent = num / den;
        fit.intercept = log_d1;
    } else {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (int r = 1; r <= top_k; ++r) {
            double x = std::log(static_cast<double>(r));
            double y = std::log(degrees[r - 1]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double k = static_cast<double>(top_k);
        fit.exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        fit.intercept = (sy - fit.exponent * sx) / k;
    }
    return fit;
}

namespace {

struct Accumulator {
    double sum = 0.0, sum_sq = 0.0;
    int count = 0;
    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return sum / count; }
    double population_std() const {
        double m = mean();
        double var = sum_sq / count - m * m;
        return var > 0.0 ? std::sqrt(var) : 0.0;
    }
};

}  // namespace

EnsembleStats ensemble_experiment(int nodes, int dims, double prob, int sims, int top_k,
                                  std::uint64_t seed) {
    if (sims < 1) throw std::invalid_argument("sims must be at least 1");

    EnsembleStats stats;
    stats.sims = sims;
    Accumulator acc_q, acc_avg, acc_max, acc_comp;
    std::vector<Accumulator> acc_rank(top_k);

    for (int s = 0; s < sims; ++s) {
        BinarySpectrum spectrum = generate_spectrum(nodes, dims, prob, seed + static_cast<std::uint64_t>(s));
        Graph g = induce_network(spectrum);
        Degrees deg = degrees(g);

        DegreeFit fit = rank_degree_fit(deg.out_strength, top_k, FitMode::FixedIntercept);
        acc_q.add(fit.exponent);

        std::vector<double> sorted = deg.out_strength;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        for (int r = 0; r < top_k; ++r) acc_rank[r].add(std::log(sorted[r]));

        DistanceReport dist = distance_metrics(g);
        acc_avg.add(dist.avg_distance);
        acc_max.add(static_cast<double>(dist.max_distance));
        acc_comp.add(static_cast<double>(dist.component_size));
        stats.max_dist_per_sim.push_back(dist.max_distance);
    }

    stats.exponent_mean = acc_q.mean();
    stats.exponent_std = acc_q.population_std();
    stats.avg_dist_mean = acc_avg.mean();
    stats.avg_dist_std = acc_avg.population_std();
    stats.max_dist_mean = acc_max.mean();
    stats.max_dist_std = acc_max.population_std();
    stats.component_size_mean = acc_comp.mean();
    stats.rank_log_degree_mean.resize(top_k);
    stats.rank_log_degree_std.resize(top_k);
    for (int r = 0; r < top_k; ++r) {
        stats.rank_log_degree_mean[r] = acc_rank[r].mean();
        stats.rank_log_degree_std[r] = acc_rank[r].population_std();
    }
    return stats;
}

std::string rank_csv(const EnsembleStats& stats) {
    std::string out = "rank,mean_log_degree,std_log_degree\n";
    for (std::size_t r = 0; r < stats.rank_log_degree_mean.size(); ++r) {
        out += std::to_string(r + 1);
        out += ',';
        out += format_double(stats.rank_log_degree_mean[r]);
        out += ',';
        out += format_double(stats.rank_log_degree_std[r]);
        out += '\n';
    }
    return out;
}

}  // namespace sigspec
