// sigspec: signal spectrum network models from the command line.
//
// Exit codes: 0 success, 1 parameter/validation error, 2 runtime or
// numeric error. Identical invocations produce byte-identical primary
// output; progress notes go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sigspec/community.hpp"
#include "sigspec/graph.hpp"
#include "sigspec/netstats.hpp"
#include "sigspec/spectrum.hpp"
#include "sigspec/wssm.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sigspec;

// Published reference values for the bundled experiments.
namespace reference {
constexpr double kFig1Exponent = -0.129;
constexpr double kFig1ExponentStd = 0.037;
constexpr double kFig1AvgDist = 2.182;
constexpr double kFig1AvgDistStd = 0.026;
constexpr double kFig1MaxDist = 3.273;
constexpr double kFig1MaxDistStd = 1.191;
constexpr double kFig1ComponentSize = 950.0;
constexpr int kKarateCoverSize = 35;
constexpr double kKarateBipartition = 0.3715;
constexpr double kKarateBestBipartition = 0.3718;
constexpr double kKarateOptimal = 0.4198;
constexpr int kKarateIntegerDims = 14;
}  // namespace reference

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void emit_report(const json& report, const std::string& out_path) {
    write_text(report.dump(2) + "\n", out_path);
}

struct CommonOutputs {
    std::string out;
    std::string format = "json";
};

void add_report_options(CLI::App* cmd, CommonOutputs& common,
                        const std::vector<std::string>& formats = {"json"}) {
    cmd->add_option("--out", common.out, "Write the primary output to this path instead of stdout");
    cmd->add_option("--format", common.format, "Primary output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
}

json degree_fit_json(const DegreeFit& fit) {
    return json{{"exponent", fit.exponent},
                {"top_k", fit.top_k},
                {"mode", fit.mode == FitMode::FixedIntercept ? "fixed-intercept" : "free-intercept"},
                {"intercept", fit.intercept}};
}

json fit_report_json(const FitReport& report) {
    return json{{"offdiag_residual", report.offdiag_residual},
                {"iterations", report.iterations},
                {"converged", report.converged}};
}

Eigen::MatrixXd weight_matrix(const Graph& g) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
    for (int u = 0; u < g.node_count(); ++u)
        for (const auto& [v, w] : g.neighbors(u)) {
            x(u, v) = w;
            if (!g.directed()) x(v, u) = w;
        }
    return x;
}

json detection_json(const Detection& d, int dims, int clusters, int restarts,
                    std::uint64_t seed) {
    return json{{"m", dims},
                {"K", clusters},
                {"restarts", restarts},
                {"Q_original", d.score},
                {"Q_approx", d.projected_score},
                {"community_sizes", community_sizes(d.partition)},
                {"best_restart", d.best_restart},
                {"seed", seed}};
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    int nodes = 0, dims = 0;
    double prob = 0.0;
    std::uint64_t seed = 0;
    std::string spectrum_out;
    CommonOutputs common;
};

void run_generate(const GenerateArgs& args) {
    BinarySpectrum spectrum = generate_spectrum(args.nodes, args.dims, args.prob, args.seed);
    Graph g = induce_network(spectrum);
    if (!args.spectrum_out.empty()) write_text(save_spectrum(spectrum), args.spectrum_out);
    std::cerr << "generate: nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    write_text(save_edge_list(g), args.common.out);
}

// ------------------------------------------------------------------- stats

struct StatsArgs {
    std::string in;
    int top = 50;
    bool directed = false;
    CommonOutputs common;
};

void run_stats(const StatsArgs& args) {
    Graph g = load_edge_list_file(args.in, args.directed);
    Degrees deg = degrees(g);
    Components comps = connected_components(g);
    DistanceReport dist = distance_metrics(g);

    int positive = 0;
    for (double d : deg.out_strength)
        if (d > 0.0) ++positive;
    int top = std::min(args.top, positive);

    json report{{"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"directed", g.directed()},
                {"dropped_loops", g.dropped_loops()},
                {"degree_fit", nullptr},
                {"distance",
                 {{"component_size", dist.component_size},
                  {"avg_distance", dist.avg_distance},
                  {"max_distance", dist.max_distance}}},
                {"component_sizes", comps.sizes}};
    if (top >= 2)
        report["degree_fit"] = degree_fit_json(
            rank_degree_fit(deg.out_strength, top, FitMode::FixedIntercept));
    std::cerr << "stats: nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    emit_report(report, args.common.out);
}

// ------------------------------------------------------------------- cover

struct CoverArgs {
    std::string in;
    std::string cliques_out, spectrum_out;
    CommonOutputs common;
};

void run_cover(const CoverArgs& args) {
    Graph g = load_edge_list_file(args.in, false);
    CliqueCover cover = clique_cover(g);
    BinarySpectrum spectrum = cover_to_spectrum(cover, g.node_count());
    long mismatches = verify_representation(spectrum, g);

    std::size_t max_clique = 0;
    for (const auto& c : cover.cliques) max_clique = std::max(max_clique, c.size());
    if (!args.cliques_out.empty()) write_text(save_cover(cover), args.cliques_out);
    if (!args.spectrum_out.empty()) write_text(save_spectrum(spectrum), args.spectrum_out);

    std::cerr << "cover: cliques=" << cover.cliques.size() << " mismatches=" << mismatches
              << "\n";
    emit_report(json{{"nodes", g.node_count()},
                     {"edges", g.edge_count()},
                     {"cover_size", cover.cliques.size()},
                     {"max_clique_size", max_clique},
                     {"spectrum_dims", spectrum.dim_count()},
                     {"mismatches", mismatches}},
                args.common.out);
}

// ------------------------------------------------------------------ approx

struct ApproxArgs {
    std::string in;
    int dims = 1;
    bool no_diag = false, directed = false, gram = false;
    double tol = 1e-9;
    int max_iter = 200;
    std::string weights_out;
    CommonOutputs common;
};

void run_approx(const ApproxArgs& args) {
    if (args.gram && args.directed)
        throw std::invalid_argument("--gram applies to undirected fits only");
    Graph g = load_edge_list_file(args.in, args.directed);
    Eigen::MatrixXd x = weight_matrix(g);
    FitReport report =
        args.directed
            ? fit_directed(x, args.dims, !args.no_diag, args.tol, args.max_iter)
            : fit_symmetric(x, args.dims, args.gram, !args.no_diag, args.tol, args.max_iter);

    if (!args.weights_out.empty()) write_text(save_weights(report.weights), args.weights_out);
    json out = fit_report_json(report);
    out["nodes"] = g.node_count();
    out["dims"] = args.dims;
    out["mode"] = args.directed ? "svd" : (args.gram ? "gram" : "signed");
    out["fit_diagonal"] = !args.no_diag;
    std::cerr << "approx: residual=" << report.offdiag_residual << " iterations="
              << report.iterations << "\n";
    emit_report(out, args.common.out);
}

// -------------------------------------------------------------- integerize

struct IntegerizeArgs {
    std::string in;
    int dims = 1, weight_bound = 3, theta_max = 3, restarts = 50;
    std::uint64_t seed = 0;
    std::string weights_out;
    CommonOutputs common;
};

void run_integerize(const IntegerizeArgs& args) {
    Graph g = load_edge_list_file(args.in, false);
    IntegerModel model =
        fit_wiassm(g, args.dims, args.weight_bound, args.theta_max, args.restarts, args.seed);
    if (!args.weights_out.empty())
        write_text(save_integer_model(model), args.weights_out);
    std::cerr << "integerize: theta=" << model.threshold
              << " misclassified=" << model.misclassified << "\n";
    emit_report(json{{"nodes", g.node_count()},
                     {"dims", args.dims},
                     {"weight_bound", args.weight_bound},
                     {"theta_max", args.theta_max},
                     {"restarts", args.restarts},
                     {"seed", args.seed},
                     {"theta", model.threshold},
                     {"misclassified", model.misclassified},
                     {"exact", model.misclassified == 0}},
                args.common.out);
}

// ------------------------------------------------------------------ detect

struct DetectArgs {
    std::string in;
    int dims = 1;
    int clusters = 0;
    bool sweep = false, directed = false;
    int restarts = 100;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int max_iter = 25000;
    std::string partition_out;
    CommonOutputs common;
};

void run_detect(const DetectArgs& args) {
    if (args.dims > 1 && !args.sweep && args.clusters <= 0)
        throw std::invalid_argument("pass --clusters K or --sweep when --dims exceeds 1");
    if (args.sweep && args.clusters > 0)
        throw std::invalid_argument("--clusters and --sweep are mutually exclusive");

    Graph g = load_edge_list_file(args.in, args.directed);
    ModularityScores scores = modularity_scores(g);
    FitReport fit = project_modularity(g, args.dims, args.tol, args.max_iter);

    Detection best;
    int used_clusters = 0;
    json sweep_trace = json::array();
    if (args.dims == 1) {
        best.partition = sign_bipartition(fit.weights);
        best.score = modularity(scores, best.partition);
        used_clusters = best.partition.count;
        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(best.partition.count, fit.weights.dim_count());
        for (int j = 0; j < g.node_count(); ++j)
            sums.row(best.partition.assignment[j]) += fit.weights.outgoing.row(j);
        best.projected_score = sums.rowwise().squaredNorm().sum();
    } else if (args.sweep) {
        bool have = false;
        for (int k = 2; k <= std::min(args.dims + 1, g.node_count()); ++k) {
            Detection d = cluster_projection(fit.weights, k, args.restarts, args.seed, scores);
            sweep_trace.push_back({{"K", k}, {"Q_original", d.score}});
            if (!have || d.score > best.score) {
                best = d;
                used_clusters = k;
                have = true;
            }
        }
        if (!have) throw std::invalid_argument("--sweep found no feasible cluster count");
    } else {
        best = cluster_projection(fit.weights, args.clusters, args.restarts, args.seed, scores);
        used_clusters = args.clusters;
    }

    if (!args.partition_out.empty())
        write_text(save_partition(best.partition, g), args.partition_out);

    json report = detection_json(best, args.dims, used_clusters, args.restarts, args.seed);
    if (args.sweep) report["sweep"] = sweep_trace;
    std::cerr << "detect: Q=" << best.score << " communities="
              << best.partition.count << "\n";
    emit_report(report, args.common.out);
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::string experiment;
    std::uint64_t seed = 0;
    int restarts = 100;
    std::string csv_out = "fig1_ranks.csv";
    CommonOutputs common;
};

void run_reproduce(const ReproduceArgs& args) {
    json report{{"experiment", args.experiment}, {"seed", args.seed}};
    if (args.experiment == "fig1") {
        EnsembleStats stats = ensemble_experiment(1000, 100, 0.02, 10, 50, args.seed);
        report["parameters"] = {{"nodes", 1000}, {"dims", 100}, {"prob", 0.02},
                                {"sims", 10},    {"top_k", 50}};
        report["computed"] = {{"sims", stats.sims},
                              {"exponent_mean", stats.exponent_mean},
                              {"exponent_std", stats.exponent_std},
                              {"avg_dist_mean", stats.avg_dist_mean},
                              {"avg_dist_std", stats.avg_dist_std},
                              {"max_dist_mean", stats.max_dist_mean},
                              {"max_dist_std", stats.max_dist_std},
                              {"component_size_mean", stats.component_size_mean},
                              {"max_dist_per_sim", stats.max_dist_per_sim},
                              {"rank_log_degree_mean", stats.rank_log_degree_mean},
                              {"rank_log_degree_std", stats.rank_log_degree_std}};
        report["reference"] = {{"exponent_mean", reference::kFig1Exponent},
                               {"exponent_std", reference::kFig1ExponentStd},
                               {"avg_dist_mean", reference::kFig1AvgDist},
                               {"avg_dist_std", reference::kFig1AvgDistStd},
                               {"max_dist_mean", reference::kFig1MaxDist},
                               {"max_dist_std", reference::kFig1MaxDistStd},
                               {"component_size_mean", reference::kFig1ComponentSize}};
        std::string csv = rank_csv(stats);
        if (args.common.format == "csv") {
            write_text(csv, args.common.out);
            return;
        }
        if (!args.csv_out.empty()) write_text(csv, args.csv_out);
        emit_report(report, args.common.out);
        return;
    }
    if (args.common.format == "csv")
        throw std::invalid_argument("--format csv applies to the fig1 experiment only");

    Graph karate = karate_club();
    if (args.experiment == "karate-cover") {
        CliqueCover cover = clique_cover(karate);
        long mismatches =
            verify_representation(cover_to_spectrum(cover, karate.node_count()), karate);
        report["computed"] = {{"cover_size", cover.cliques.size()},
                              {"mismatches", mismatches}};
        report["reference"] = {{"cover_size", reference::kKarateCoverSize}};
    } else if (args.experiment == "karate-bipartition") {
        Detection d = detect(karate, 1, 2, 1, args.seed);
        report["computed"] = detection_json(d, 1, d.partition.count, 0, args.seed);
        report["reference"] = {{"Q_original", reference::kKarateBipartition},
                               {"best_known_bipartition", reference::kKarateBestBipartition}};
    } else if (args.experiment == "karate-optimal") {
        Detection d = detect(karate, 7, 4, args.restarts, args.seed);
        report["computed"] = detection_json(d, 7, 4, args.restarts, args.seed);
        report["reference"] = {{"Q_original", reference::kKarateOptimal},
                               {"integer_model_dims", reference::kKarateIntegerDims}};
    } else {
        throw std::invalid_argument("unknown --experiment '" + args.experiment + "'");
    }
    emit_report(report, args.common.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signal spectrum network models: generation, representation, "
                 "approximation, and community detection"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate",
                                        "Sample a random spectrum and emit its induced network");
    generate->add_option("--nodes", gen.nodes, "Node count")->required()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--dims", gen.dims, "Spectrum dimension")->required()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--prob", gen.prob, "Bernoulli unit probability")->required()
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("--spectrum-out", gen.spectrum_out, "Also write the spectrum TSV here");
    gen.common.format = "tsv";
    add_report_options(generate, gen.common, {"tsv"});
    generate->callback([&] { run_generate(gen); });

    StatsArgs stats;
    auto* stats_cmd = app.add_subcommand("stats", "Degree fit, distances, and components");
    stats_cmd->add_option("--in", stats.in, "Edge list path")->required();
    stats_cmd->add_option("--top", stats.top, "Rank count for the degree fit (clamped)")
        ->capture_default_str()->check(CLI::PositiveNumber);
    stats_cmd->add_flag("--directed", stats.directed, "Treat the input as directed");
    add_report_options(stats_cmd, stats.common);
    stats_cmd->callback([&] { run_stats(stats); });

    CoverArgs cover;
    auto* cover_cmd = app.add_subcommand("cover",
                                         "Greedy clique cover and exact spectrum representation");
    cover_cmd->add_option("--in", cover.in, "Edge list path")->required();
    cover_cmd->add_option("--cliques-out", cover.cliques_out, "Write the cover here");
    cover_cmd->add_option("--spectrum-out", cover.spectrum_out, "Write the 0/1 spectrum here");
    add_report_options(cover_cmd, cover.common);
    cover_cmd->callback([&] { run_cover(cover); });

    ApproxArgs approx;
    auto* approx_cmd = app.add_subcommand("approx", "Low-rank projection of the weight matrix");
    approx_cmd->add_option("--in", approx.in, "Edge list path")->required();
    approx_cmd->add_option("--dims", approx.dims, "Projection dimension")->required()
        ->check(CLI::PositiveNumber);
    approx_cmd->add_flag("--no-diag", approx.no_diag, "Ignore the diagonal (loops) when fitting");
    approx_cmd->add_flag("--directed", approx.directed, "Directed input and SVD fit");
    approx_cmd->add_flag("--gram", approx.gram, "Positive semidefinite (gram) fit");
    approx_cmd->add_option("--tol", approx.tol, "Stop when the residual improves by less")
        ->capture_default_str();
    approx_cmd->add_option("--max-iter", approx.max_iter, "Iteration cap for the no-diag fit")
        ->capture_default_str()->check(CLI::PositiveNumber);
    approx_cmd->add_option("--weights-out", approx.weights_out, "Write the weights TSV here");
    add_report_options(approx_cmd, approx.common);
    approx_cmd->callback([&] { run_approx(approx); });

    IntegerizeArgs integerize;
    auto* int_cmd = app.add_subcommand("integerize", "Integer thresholded model search");
    int_cmd->add_option("--in", integerize.in, "Edge list path (undirected, unweighted)")
        ->required();
    int_cmd->add_option("--dims", integerize.dims, "Model dimension")->required()
        ->check(CLI::PositiveNumber);
    int_cmd->add_option("--L", integerize.weight_bound, "Integer weight bound")
        ->capture_default_str()->check(CLI::PositiveNumber);
    int_cmd->add_option("--theta-max", integerize.theta_max, "Largest threshold tried")
        ->capture_default_str()->check(CLI::PositiveNumber);
    int_cmd->add_option("--restarts", integerize.restarts, "Search restarts")
        ->capture_default_str()->check(CLI::PositiveNumber);
    int_cmd->add_option("--seed", integerize.seed, "RNG seed")->capture_default_str();
    int_cmd->add_option("--weights-out", integerize.weights_out, "Write the integer model here");
    add_report_options(int_cmd, integerize.common);
    int_cmd->callback([&] { run_integerize(integerize); });

    DetectArgs detect_args;
    auto* detect_cmd = app.add_subcommand("detect", "Community detection over the projection");
    detect_cmd->add_option("--in", detect_args.in, "Edge list path")->required();
    detect_cmd->add_option("--dims", detect_args.dims, "Projection dimension")->required()
        ->check(CLI::PositiveNumber);
    detect_cmd->add_option("--clusters", detect_args.clusters, "Cluster count K")
        ->check(CLI::PositiveNumber);
    detect_cmd->add_flag("--sweep", detect_args.sweep, "Try K = 2..dims+1 and keep the best");
    detect_cmd->add_flag("--directed", detect_args.directed, "Treat the input as directed");
    detect_cmd->add_option("--restarts", detect_args.restarts, "Clustering restarts")
        ->capture_default_str()->check(CLI::PositiveNumber);
    detect_cmd->add_option("--seed", detect_args.seed, "RNG seed")->capture_default_str();
    detect_cmd->add_option("--tol", detect_args.tol, "Projection convergence tolerance")
        ->capture_default_str();
    detect_cmd->add_option("--max-iter", detect_args.max_iter, "Projection iteration cap")
        ->capture_default_str()->check(CLI::PositiveNumber);
    detect_cmd->add_option("--partition-out", detect_args.partition_out,
                           "Write the partition TSV here");
    add_report_options(detect_cmd, detect_args.common);
    detect_cmd->callback([&] { run_detect(detect_args); });

    ReproduceArgs repro;
    auto* repro_cmd = app.add_subcommand("reproduce",
                                         "Re-run a bundled experiment and compare to its "
                                         "reference values");
    repro_cmd->add_option("--experiment", repro.experiment,
                          "One of: fig1, karate-cover, karate-bipartition, karate-optimal")
        ->required()
        ->check(CLI::IsMember({"fig1", "karate-cover", "karate-bipartition", "karate-optimal"}));
    repro_cmd->add_option("--seed", repro.seed, "RNG seed")->capture_default_str();
    repro_cmd->add_option("--restarts", repro.restarts, "Restarts for karate-optimal")
        ->capture_default_str()->check(CLI::PositiveNumber);
    repro_cmd->add_option("--csv-out", repro.csv_out, "Rank CSV path for fig1")
        ->capture_default_str();
    add_report_options(repro_cmd, repro.common, {"json", "csv"});
    repro_cmd->callback([&] { run_reproduce(repro); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
