#include <benchmark/benchmark.h>

#include "sigspec/community.hpp"
#include "sigspec/graph.hpp"
#include "sigspec/netstats.hpp"
#include "sigspec/spectrum.hpp"
#include "sigspec/wssm.hpp"

using namespace sigspec;

namespace {

void BM_generate_spectrum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BinarySpectrum s = generate_spectrum(n, 100, 0.02, 1);
        benchmark::DoNotOptimize(s.unit_count());
    }
}
BENCHMARK(BM_generate_spectrum)->Arg(1000)->Arg(4000);

void BM_induce_network(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    BinarySpectrum s = generate_spectrum(n, 100, 0.02, 1);
    for (auto _ : state) {
        Graph g = induce_network(s);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_induce_network)->Arg(500)->Arg(1000);

void BM_distance_metrics(benchmark::State& state) {
    Graph g = induce_network(generate_spectrum(static_cast<int>(state.range(0)), 100, 0.02, 1));
    for (auto _ : state) {
        DistanceReport r = distance_metrics(g);
        benchmark::DoNotOptimize(r.avg_distance);
    }
}
BENCHMARK(BM_distance_metrics)->Arg(500)->Arg(1000);

void BM_clique_cover_karate(benchmark::State& state) {
    Graph g = karate_club();
    for (auto _ : state) {
        CliqueCover c = clique_cover(g);
        benchmark::DoNotOptimize(c.cliques.size());
    }
}
BENCHMARK(BM_clique_cover_karate);

void BM_modularity_projection(benchmark::State& state) {
    Graph g = karate_club();
    int iters = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FitReport fit = project_modularity(g, 7, 1e-9, iters);
        benchmark::DoNotOptimize(fit.offdiag_residual);
    }
}
BENCHMARK(BM_modularity_projection)->Arg(200)->Arg(2000);

void BM_cluster_projection(benchmark::State& state) {
    Graph g = karate_club();
    ModularityScores scores = modularity_scores(g);
    FitReport fit = project_modularity(g, 7);
    for (auto _ : state) {
        Detection d = cluster_projection(fit.weights, 4, static_cast<int>(state.range(0)), 0,
                                         scores);
        benchmark::DoNotOptimize(d.score);
    }
}
BENCHMARK(BM_cluster_projection)->Arg(10)->Arg(100);

void BM_wiassm_descend(benchmark::State& state) {
    Graph g = karate_club();
    int dims = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IntegerModel m = fit_wiassm(g, dims, 3, 3, 2, 0);
        benchmark::DoNotOptimize(m.misclassified);
    }
}
BENCHMARK(BM_wiassm_descend)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
