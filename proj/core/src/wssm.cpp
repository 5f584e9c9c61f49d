#include "sigspec/wssm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sigspec/spectrum.hpp"

namespace sigspec {

double SpectrumWeights::reconstruct(int i, int j) const {
    if (i < 0 || i >= node_count() || j < 0 || j >= node_count())
        throw std::out_of_range("node index out of range");
    return outgoing.row(i).dot(incoming.row(j));
}

SpectrumWeights SpectrumWeights::symmetric(Eigen::MatrixXd w) {
    SpectrumWeights s;
    s.outgoing = std::move(w);
    s.incoming = s.outgoing;
    s.undirected = true;
    return s;
}

SpectrumWeights SpectrumWeights::asymmetric(Eigen::MatrixXd out, Eigen::MatrixXd in) {
    if (out.rows() != in.rows() || out.cols() != in.cols())
        throw std::invalid_argument("outgoing and incoming shapes differ");
    SpectrumWeights s;
    s.outgoing = std::move(out);
    s.incoming = std::move(in);
    s.undirected = false;
    return s;
}

namespace {

// Fix eigen/singular vector signs so the largest-magnitude component is
// positive; keeps decompositions reproducible across platforms.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    int where = 0;
    v.cwiseAbs().maxCoeff(&where);
    if (v[where] < 0) v = -v;
}

// Keep up to `dims` largest positive eigenvalues; column d is sqrt(l) v.
Eigen::MatrixXd gram_truncate(const Eigen::MatrixXd& y, int dims) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
    const auto& vals = es.eigenvalues();  // ascending
    int n = static_cast<int>(y.rows());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, dims);
    for (int d = 0; d < std::min(dims, n); ++d) {
        double lambda = vals[n - 1 - d];
        if (lambda <= 0.0) break;
        Eigen::VectorXd v = es.eigenvectors().col(n - 1 - d);
        fix_sign(v);
        w.col(d) = std::sqrt(lambda) * v;
    }
    return w;
}

// Keep the `dims` largest-magnitude eigenpairs; incoming = v, outgoing =
// lambda v, so negative eigenvalues are representable.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> signed_truncate(const Eigen::MatrixXd& y, int dims) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
    const auto& vals = es.eigenvalues();
    int n = static_cast<int>(y.rows());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double aa = std::abs(vals[a]), ab = std::abs(vals[b]);
        if (aa != ab) return aa > ab;
        return vals[a] > vals[b];
    });
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, dims);
    Eigen::MatrixXd in = Eigen::MatrixXd::Zero(n, dims);
    for (int d = 0; d < std::min(dims, n); ++d) {
        double lambda = vals[order[d]];
        if (lambda == 0.0) break;
        Eigen::VectorXd v = es.eigenvectors().col(order[d]);
        fix_sign(v);
        in.col(d) = v;
        out.col(d) = lambda * v;
    }
    return {std::move(out), std::move(in)};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> svd_truncate(const Eigen::MatrixXd& y, int dims) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    int n = static_cast<int>(y.rows());
    int rank = static_cast<int>(svd.singularValues().size());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, dims);
    Eigen::MatrixXd in = Eigen::MatrixXd::Zero(y.cols(), dims);
    for (int d = 0; d < std::min(dims, rank); ++d) {
        double sigma = svd.singularValues()[d];
        if (sigma == 0.0) break;
        Eigen::VectorXd u = svd.matrixU().col(d);
        Eigen::VectorXd v = svd.matrixV().col(d);
        int where = 0;
        u.cwiseAbs().maxCoeff(&where);
        if (u[where] < 0) {
            u = -u;
            v = -v;
        }
        out.col(d) = sigma * u;
        in.col(d) = v;
    }
    return {std::move(out), std::move(in)};
}

double offdiag_norm(const Eigen::MatrixXd& recon, const Eigen::MatrixXd& target) {
    Eigen::MatrixXd diff = target - recon;
    diff.diagonal().setZero();
    return diff.norm();
}

// Alternating diagonal-fill loop shared by the symmetric and directed fits.
template <typename Truncate>
FitReport alternating_fit(const Eigen::MatrixXd& target, double tol, int max_iter,
                          std::vector<double>* residual_trace, Truncate truncate) {
    int n = static_cast<int>(target.rows());
    Eigen::VectorXd fill = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd y = target;
    double prev = std::numeric_limits<double>::infinity();
    FitReport report;
    for (int it = 1; it <= max_iter; ++it) {
        y.diagonal() = fill;
        report.weights = truncate(y);
        Eigen::MatrixXd recon = report.weights.reconstruction();
        double resid = offdiag_norm(recon, target);
        if (residual_trace) residual_trace->push_back(resid);
        fill = recon.diagonal();
        report.offdiag_residual = resid;
        report.iterations = it;
        if (prev - resid < tol) {
            report.converged = true;
            break;
        }
        prev = resid;
    }
    return report;
}

void validate_fit_args(int dims, double tol, int max_iter) {
    if (dims < 1) throw std::invalid_argument("dims must be at least 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
}

}  // namespace

FitReport fit_symmetric(const Eigen::MatrixXd& target, int dims, bool gram, bool fit_diagonal,
                        double tol, int max_iter, std::vector<double>* residual_trace) {
    validate_fit_args(dims, tol, max_iter);
    if (target.rows() != target.cols())
        throw std::invalid_argument("target matrix is not square");
    if (target.size() > 0 && (target - target.transpose()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("target matrix is not symmetric");

    auto truncate = [&](const Eigen::MatrixXd& y) {
        if (gram) return SpectrumWeights::symmetric(gram_truncate(y, dims));
        auto [out, in] = signed_truncate(y, dims);
        return SpectrumWeights::asymmetric(std::move(out), std::move(in));
    };

    if (fit_diagonal) {
        FitReport report;
        report.weights = truncate(target);
        report.offdiag_residual = offdiag_norm(report.weights.reconstruction(), target);
        if (residual_trace) residual_trace->push_back(report.offdiag_residual);
        report.iterations = 1;
        report.converged = true;
        return report;
    }
    return alternating_fit(target, tol, max_iter, residual_trace, truncate);
}

FitReport fit_directed(const Eigen::MatrixXd& target, int dims, bool fit_diagonal, double tol,
                       int max_iter, std::vector<double>* residual_trace) {
    validate_fit_args(dims, tol, max_iter);
    if (target.rows() != target.cols())
        throw std::invalid_argument("target matrix is not square");

    auto truncate = [&](const Eigen::MatrixXd& y) {
        auto [out, in] = svd_truncate(y, dims);
        return SpectrumWeights::asymmetric(std::move(out), std::move(in));
    };

    if (fit_diagonal) {
        FitReport report;
        report.weights = truncate(target);
        report.offdiag_residual = offdiag_norm(report.weights.reconstruction(), target);
        if (residual_trace) residual_trace->push_back(report.offdiag_residual);
        report.iterations = 1;
        report.converged = true;
        return report;
    }
    return alternating_fit(target, tol, max_iter, residual_trace, truncate);
}

double offdiag_residual(const SpectrumWeights& w, const Eigen::MatrixXd& target) {
    if (target.rows() != w.node_count() || target.cols() != w.node_count())
        throw std::invalid_argument("target shape does not match the weights");
    return offdiag_norm(w.reconstruction(), target);
}

Graph threshold_classify(const SpectrumWeights& w, double threshold) {
    int n = w.node_count();
    Graph g(n, false);
    Eigen::MatrixXd recon = w.reconstruction();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (recon(i, j) >= threshold && recon(j, i) >= threshold) g.add_edge(i, j, 1.0);
    return g;
}

namespace {

void validate_wiassm_input(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("integer models require an undirected graph");
    if (!g.is_unit_weighted())
        throw std::invalid_argument("integer models require an unweighted graph");
}

std::vector<std::uint8_t> adjacency_flags(const Graph& g) {
    int n = g.node_count();
    std::vector<std::uint8_t> a(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.neighbors(u)) {
            (void)w;
            a[static_cast<std::size_t>(u) * n + v] = 1;
        }
    return a;
}

}  // namespace

IntegerModel wiassm_descend(const Graph& g, Eigen::MatrixXi start, int threshold,
                            int weight_bound, int threshold_max, std::vector<long>* mis_trace) {
    validate_wiassm_input(g);
    int n = g.node_count();
    int m = static_cast<int>(start.cols());
    if (start.rows() != n) throw std::invalid_argument("start has the wrong number of rows");
    if (weight_bound < 1 || threshold_max < 1 || threshold < 1 || threshold > threshold_max)
        throw std::invalid_argument("invalid integer model bounds");
    if (start.size() > 0 && start.cwiseAbs().maxCoeff() > weight_bound)
        throw std::invalid_argument("start entries exceed the weight bound");

    auto adj = adjacency_flags(g);
    Eigen::MatrixXi weights = std::move(start);
    Eigen::MatrixXi recon = weights * weights.transpose();

    auto pair_mis = [&](int i, int j, int theta) {
        return (recon(i, j) >= theta) != static_cast<bool>(adj[static_cast<std::size_t>(i) * n + j]);
    };
    auto total_mis = [&](int theta) {
        long total = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pair_mis(i, j, theta)) ++total;
        return total;
    };

    long total = total_mis(threshold);
    if (mis_trace) mis_trace->push_back(total);

    bool changed = true;
    while (changed && total > 0) {
        changed = false;
        for (int j = 0; j < n && total > 0; ++j) {
            for (int d = 0; d < m && total > 0; ++d) {
                int current = weights(j, d);
                long cur_mis = 0;
                for (int k = 0; k < n; ++k)
                    if (k != j && pair_mis(j, k, threshold)) ++cur_mis;

                int best_value = current;
                long best_mis = cur_mis;
                for (int v = -weight_bound; v <= weight_bound; ++v) {
                    if (v == current) continue;
                    int delta = v - current;
                    long cand = 0;
                    for (int k = 0; k < n; ++k) {
                        if (k == j) continue;
                        bool hit = recon(j, k) + delta * weights(k, d) >= threshold;
                        if (hit != static_cast<bool>(adj[static_cast<std::size_t>(j) * n + k]))
                            ++cand;
                    }
                    if (cand < best_mis) {
                        best_mis = cand;
                        best_value = v;
                    }
                }
                if (best_value != current) {
                    int delta = best_value - current;
                    for (int k = 0; k < n; ++k) {
                        if (k == j) continue;
                        recon(j, k) += delta * weights(k, d);
                        recon(k, j) = recon(j, k);
                    }
                    recon(j, j) += best_value * best_value - current * current;
                    weights(j, d) = best_value;
                    total += best_mis - cur_mis;
                    changed = true;
                    if (mis_trace) mis_trace->push_back(total);
                }
            }
        }
        if (total == 0) break;
        int best_theta = threshold;
        long best_total = total;
        for (int t = 1; t <= threshold_max; ++t) {
            if (t == threshold) continue;
            long cand = total_mis(t);
            if (cand < best_total) {
                best_total = cand;
                best_theta = t;
            }
        }
        if (best_theta != threshold) {
            threshold = best_theta;
            total = best_total;
            changed = true;
            if (mis_trace) mis_trace->push_back(total);
        }
    }
    return IntegerModel{std::move(weights), threshold, total};
}

IntegerModel fit_wiassm(const Graph& g, int dims, int weight_bound, int threshold_max,
                        int restarts, std::uint64_t seed) {
    validate_wiassm_input(g);
    if (dims < 1) throw std::invalid_argument("dims must be at least 1");
    if (weight_bound < 1) throw std::invalid_argument("weight_bound must be at least 1");
    if (threshold_max < 1) throw std::invalid_argument("threshold_max must be at least 1");
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");

    int n = g.node_count();
    if (n == 0) return IntegerModel{Eigen::MatrixXi(0, dims), 1, 0};

    IntegerModel best;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        Eigen::MatrixXi start(n, dims);
        if (r == 0) {
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
            for (int u = 0; u < n; ++u)
                for (const auto& [v, w] : g.neighbors(u)) a(u, v) = w;
            FitReport fit = fit_symmetric(a, dims, /*gram=*/true, /*fit_diagonal=*/false);
            double peak = fit.weights.outgoing.size() > 0
                              ? fit.weights.outgoing.cwiseAbs().maxCoeff()
                              : 0.0;
            double scale = peak > 0.0 ? weight_bound / peak : 1.0;
            for (int j = 0; j < n; ++j)
                for (int d = 0; d < dims; ++d) {
                    double v = std::round(scale * fit.weights.outgoing(j, d));
                    start(j, d) = static_cast<int>(
                        std::clamp(v, -static_cast<double>(weight_bound),
                                   static_cast<double>(weight_bound)));
                }
        } else if (r == 1) {
            CliqueCover cover = clique_cover(g);
            start.setZero();
            int usable = std::min<int>(dims, static_cast<int>(cover.cliques.size()));
            for (int d = 0; d < usable; ++d)
                for (int j : cover.cliques[d]) start(j, d) = 1;
        } else {
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
            int span = 2 * weight_bound + 1;
            for (int j = 0; j < n; ++j)
                for (int d = 0; d < dims; ++d)
                    start(j, d) = static_cast<int>(rng() % static_cast<std::uint64_t>(span)) -
                                  weight_bound;
        }
        IntegerModel model = wiassm_descend(g, std::move(start), 1, weight_bound, threshold_max);
        if (!have_best || model.misclassified < best.misclassified) {
            best = std::move(model);
            have_best = true;
        }
        if (best.misclassified == 0) break;
    }
    return best;
}

std::vector<double> hub_scores(const SpectrumWeights& w) {
    std::vector<double> scores(w.node_count());
    for (int j = 0; j < w.node_count(); ++j) {
        double sq = w.outgoing.row(j).squaredNorm();
        if (!w.undirected) sq += w.incoming.row(j).squaredNorm();
        scores[j] = std::sqrt(sq);
    }
    return scores;
}

namespace {

void append_matrix_rows(std::string& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        for (Eigen::Index d = 0; d < m.cols(); ++d) {
            if (d) out += '\t';
            out += format_double(m(j, d));
        }
        out += '\n';
    }
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::vector<std::vector<std::string_view>> tokenized_lines(std::string_view text) {
    std::vector<std::vector<std::string_view>> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        auto tokens = tokenize(line);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

double parse_real(std::string_view tok) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::runtime_error("weights file: cannot parse number '" + std::string(tok) + "'");
    return v;
}

}  // namespace

std::string save_weights(const SpectrumWeights& w) {
    std::string out = std::to_string(w.node_count()) + "\t" + std::to_string(w.dim_count()) +
                      "\t" + (w.undirected ? "0" : "1") + "\n";
    append_matrix_rows(out, w.outgoing);
    if (!w.undirected) append_matrix_rows(out, w.incoming);
    return out;
}

SpectrumWeights load_weights(std::string_view text) {
    auto lines = tokenized_lines(text);
    if (lines.empty() || lines[0].size() != 3)
        throw std::runtime_error("weights file: missing 'n m directed' header");
    int n = std::stoi(std::string(lines[0][0]));
    int m = std::stoi(std::string(lines[0][1]));
    bool directed = lines[0][2] == "1";
    std::size_t expected = 1 + static_cast<std::size_t>(directed ? 2 * n : n);
    if (lines.size() != expected) throw std::runtime_error("weights file: wrong row count");

    auto read_block = [&](std::size_t first) {
        Eigen::MatrixXd mat(n, m);
        for (int j = 0; j < n; ++j) {
            const auto& row = lines[first + j];
            if (static_cast<int>(row.size()) != m)
                throw std::runtime_error("weights file: wrong column count");
            for (int d = 0; d < m; ++d) mat(j, d) = parse_real(row[d]);
        }
        return mat;
    };

    if (!directed) return SpectrumWeights::symmetric(read_block(1));
    Eigen::MatrixXd out = read_block(1);
    Eigen::MatrixXd in = read_block(1 + static_cast<std::size_t>(n));
    return SpectrumWeights::asymmetric(std::move(out), std::move(in));
}

std::string save_integer_model(const IntegerModel& model) {
    std::string out = std::to_string(model.weights.rows()) + "\t" +
                      std::to_string(model.weights.cols()) + "\t0\n";
    out += "theta\t" + std::to_string(model.threshold) + "\n";
    for (Eigen::Index j = 0; j < model.weights.rows(); ++j) {
        for (Eigen::Index d = 0; d < model.weights.cols(); ++d) {
            if (d) out += '\t';
            out += std::to_string(model.weights(j, d));
        }
        out += '\n';
    }
    return out;
}

IntegerModel load_integer_model(std::string_view text) {
    auto lines = tokenized_lines(text);
    if (lines.size() < 2 || lines[0].size() != 3)
        throw std::runtime_error("integer model file: missing header");
    int n = std::stoi(std::string(lines[0][0]));
    int m = std::stoi(std::string(lines[0][1]));
    if (lines[1].size() != 2 || lines[1][0] != "theta")
        throw std::runtime_error("integer model file: missing theta line");
    IntegerModel model;
    model.threshold = std::stoi(std::string(lines[1][1]));
    if (lines.size() != 2 + static_cast<std::size_t>(n))
        throw std::runtime_error("integer model file: wrong row count");
    model.weights.resize(n, m);
    for (int j = 0; j < n; ++j) {
        const auto& row = lines[2 + j];
        if (static_cast<int>(row.size()) != m)
            throw std::runtime_error("integer model file: wrong column count");
        for (int d = 0; d < m; ++d) model.weights(j, d) = std::stoi(std::string(row[d]));
    }
    return model;
}

}  // namespace sigspec
