#ifndef SIGSPEC_SPECTRUM_HPP
#define SIGSPEC_SPECTRUM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigspec/graph.hpp"

namespace sigspec {

/// Per-node binary signal spectrum: an n x m bit matrix, bit (j, d) set when
/// node j transmits/receives signal type d. Rows are packed into 64-bit
/// words so overlap tests are word-wise ANDs.
class BinarySpectrum {
public:
    BinarySpectrum() = default;
    BinarySpectrum(int nodes, int dims);

    int node_count() const { return n_; }
    int dim_count() const { return m_; }

    bool bit(int node, int dim) const;
    void set_bit(int node, int dim, bool value);

    /// True when rows u and v share at least one set bit.
    bool overlaps(int u, int v) const;

    std::span<const std::uint64_t> row_words(int node) const;

    long unit_count() const;

private:
    void check(int node, int dim) const;

    int n_ = 0, m_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Ordered list of cliques over a host graph whose pairwise unions cover the
/// edge set exactly. Each clique is sorted ascending.
struct CliqueCover {
    std::vector<std::vector<int>> cliques;
};

/// Independent Bernoulli(prob) bits from a seeded mt19937_64 stream, drawn
/// row-major. A draw is u = (next() >> 11) * 2^-53, bit = u < prob, so
/// identical (nodes, dims, prob, seed) reproduce identical spectra on every
/// platform.
BinarySpectrum generate_spectrum(int nodes, int dims, double prob, std::uint64_t seed);

/// Undirected unit-weight graph with an edge wherever two spectra share at
/// least one signal type. Loops are never created.
Graph induce_network(const BinarySpectrum& s);

/// Greedy deterministic edge clique cover: scan edges in lexicographic
/// order; every uncovered edge seeds a clique that grows by the common
/// neighbor covering the most currently-uncovered edges (ties to the
/// smallest index) until no common neighbor remains. Cover size never
/// exceeds the edge count.
CliqueCover clique_cover(const Graph& g);

/// Spectrum with one signal type per clique; bit (j, d) set iff node j
/// belongs to clique d. Inducing it reproduces the covered graph exactly.
BinarySpectrum cover_to_spectrum(const CliqueCover& cover, int nodes);

/// Number of unordered node pairs whose induced adjacency disagrees with g;
/// 0 means exact representation.
long verify_representation(const BinarySpectrum& s, const Graph& g);

/// TSV, one row per node, m tab-separated 0/1 digits.
std::string save_spectrum(const BinarySpectrum& s);
BinarySpectrum load_spectrum(std::string_view text);

/// One clique per line, space-separated node indices.
std::string save_cover(const CliqueCover& cover);
CliqueCover load_cover(std::string_view text);

}  // namespace sigspec

#endif
