#ifndef SIGSPEC_WSSM_HPP
#define SIGSPEC_WSSM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigspec/graph.hpp"

namespace sigspec {

/// Real-valued node projections: entry (i, j) of the represented network is
/// the dot product of outgoing row i with incoming row j. Undirected models
/// keep the two matrices identical.
struct SpectrumWeights {
    Eigen::MatrixXd outgoing;  // n x m
    Eigen::MatrixXd incoming;  // n x m, same object as outgoing when undirected
    bool undirected = true;

    int node_count() const { return static_cast<int>(outgoing.rows()); }
    int dim_count() const { return static_cast<int>(outgoing.cols()); }

    double reconstruct(int i, int j) const;
    Eigen::MatrixXd reconstruction() const { return outgoing * incoming.transpose(); }

    static SpectrumWeights symmetric(Eigen::MatrixXd w);
    static SpectrumWeights asymmetric(Eigen::MatrixXd out, Eigen::MatrixXd in);
};

struct FitReport {
    SpectrumWeights weights;
    double offdiag_residual = 0.0;  // Frobenius norm over i != j entries
    int iterations = 0;
    bool converged = false;
};

/// Low-rank fit of a symmetric matrix.
///
/// fit_diagonal = true, gram = true: keep up to `dims` largest positive
/// eigenvalues, column d of the (undirected) weights is sqrt(lambda_d) v_d.
/// fit_diagonal = true, gram = false: keep the `dims` largest-|lambda|
/// eigenpairs as incoming = v_d, outgoing = lambda_d v_d; this is the exact
/// Frobenius-optimal rank fit and carries negative eigenvalues.
/// fit_diagonal = false: alternating scheme for omitted loop edges; starting
/// from a zero diagonal fill, each pass re-decomposes the target with the
/// diagonal replaced by the previous reconstruction's diagonal, until the
/// off-diagonal residual improves by less than tol or max_iter is reached.
/// The off-diagonal residual never increases from pass to pass; pass an
/// optional trace to record it.
FitReport fit_symmetric(const Eigen::MatrixXd& target, int dims, bool gram, bool fit_diagonal,
                        double tol = 1e-9, int max_iter = 200,
                        std::vector<double>* residual_trace = nullptr);

/// Directed counterpart via singular value decomposition; the diagonal-free
/// variant uses the same alternating scheme.
FitReport fit_directed(const Eigen::MatrixXd& target, int dims, bool fit_diagonal,
                       double tol = 1e-9, int max_iter = 200,
                       std::vector<double>* residual_trace = nullptr);

/// sqrt of the squared reconstruction error over off-diagonal entries.
double offdiag_residual(const SpectrumWeights& w, const Eigen::MatrixXd& target);

/// Unweighted undirected graph with an edge (i, j) wherever both
/// reconstruct(i, j) and reconstruct(j, i) reach the threshold (a single
/// test when the weights are undirected).
Graph threshold_classify(const SpectrumWeights& w, double threshold);

/// Integer projection: 0/1 adjacency is recovered by thresholding integer
/// dot products at an integer threshold.
struct IntegerModel {
    Eigen::MatrixXi weights;  // n x m, entries within [-bound, bound]
    int threshold = 1;
    long misclassified = 0;  // unordered off-diagonal disagreements
};

/// Coordinate descent from a given start: sweeps nodes ascending, dims
/// ascending, threshold last, accepting only strict misclassification
/// drops, until a full sweep makes no change. mis_trace, when given,
/// records the count after every accepted move (and the initial count
/// first).
IntegerModel wiassm_descend(const Graph& g, Eigen::MatrixXi start, int threshold,
                            int weight_bound, int threshold_max,
                            std::vector<long>* mis_trace = nullptr);

/// Best-of-restarts heuristic search for an integer model of an unweighted
/// undirected graph. Restart 0 starts from the continuous gram fit scaled
/// into [-weight_bound, weight_bound] and rounded; restart 1 from the
/// clique-cover 0/1 spectrum (truncated or zero-padded to `dims` columns);
/// later restarts from seeded random integers (sub-seed = seed + restart).
/// Ties keep the earliest restart; an exact model returns immediately.
IntegerModel fit_wiassm(const Graph& g, int dims, int weight_bound, int threshold_max,
                        int restarts, std::uint64_t seed);

/// Per-node Euclidean norm of the projection rows: the single row for
/// undirected weights, the concatenated outgoing and incoming rows
/// otherwise. For 0/1 spectra this is the square root of the unit count.
std::vector<double> hub_scores(const SpectrumWeights& w);

/// TSV with header "n<TAB>m<TAB>directed", then n rows of m reals for the
/// outgoing weights, then n more rows for the incoming weights when
/// directed.
std::string save_weights(const SpectrumWeights& w);
SpectrumWeights load_weights(std::string_view text);

/// Same header plus a "theta<TAB>t" line, then n rows of m integers.
std::string save_integer_model(const IntegerModel& model);
IntegerModel load_integer_model(std::string_view text);

}  // namespace sigspec

#endif
