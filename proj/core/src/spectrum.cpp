#include "sigspec/spectrum.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace sigspec {

BinarySpectrum::BinarySpectrum(int nodes, int dims)
    : n_(nodes), m_(dims), words_per_row_((dims + 63) / 64) {
    if (nodes < 0 || dims < 0) throw std::invalid_argument("spectrum dimensions must be non-negative");
    words_.assign(static_cast<std::size_t>(n_) * words_per_row_, 0);
}

void BinarySpectrum::check(int node, int dim) const {
    if (node < 0 || node >= n_ || dim < 0 || dim >= m_)
        throw std::out_of_range("spectrum index out of range");
}

bool BinarySpectrum::bit(int node, int dim) const {
    check(node, dim);
    return (words_[static_cast<std::size_t>(node) * words_per_row_ + dim / 64] >> (dim % 64)) & 1u;
}

void BinarySpectrum::set_bit(int node, int dim, bool value) {
    check(node, dim);
    auto& word = words_[static_cast<std::size_t>(node) * words_per_row_ + dim / 64];
    std::uint64_t mask = std::uint64_t{1} << (dim % 64);
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

bool BinarySpectrum::overlaps(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("spectrum index out of range");
    const std::uint64_t* a = words_.data() + static_cast<std::size_t>(u) * words_per_row_;
    const std::uint64_t* b = words_.data() + static_cast<std::size_t>(v) * words_per_row_;
    for (int w = 0; w < words_per_row_; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

std::span<const std::uint64_t> BinarySpectrum::row_words(int node) const {
    if (node < 0 || node >= n_) throw std::out_of_range("spectrum index out of range");
    return {words_.data() + static_cast<std::size_t>(node) * words_per_row_,
            static_cast<std::size_t>(words_per_row_)};
}

long BinarySpectrum::unit_count() const {
    long total = 0;
    for (std::uint64_t w : words_) total += __builtin_popcountll(w);
    return total;
}

BinarySpectrum generate_spectrum(int nodes, int dims, double prob, std::uint64_t seed) {
    if (!(prob >= 0.0 && prob <= 1.0))
        throw std::invalid_argument("prob must be within [0, 1]");
    BinarySpectrum s(nodes, dims);
    std::mt19937_64 rng(seed);
    constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    for (int j = 0; j < nodes; ++j)
        for (int d = 0; d < dims; ++d) {
            double u = static_cast<double>(rng() >> 11) * kInv53;
            if (u < prob) s.set_bit(j, d, true);
        }
    return s;
}

Graph induce_network(const BinarySpectrum& s) {
    Graph g(s.node_count(), false);
    for (int i = 0; i < s.node_count(); ++i)
        for (int j = i + 1; j < s.node_count(); ++j)
            if (s.overlaps(i, j)) g.add_edge(i, j, 1.0);
    return g;
}

namespace {

inline long long pair_key(int i, int j, int n) {
    return static_cast<long long>(std::min(i, j)) * n + std::max(i, j);
}

}  // namespace

CliqueCover clique_cover(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("clique cover requires an undirected graph");
    int n = g.node_count();

    std::vector<std::vector<int>> adj(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.neighbors(u)) {
            if (w == 0.0) continue;  // only nonzero weights count as edges
            adj[u].push_back(v);
            if (u < v) edges.emplace_back(u, v);
        }
    std::sort(edges.begin(), edges.end());

    std::unordered_set<long long> covered;
    covered.reserve(edges.size() * 2);

    CliqueCover cover;
    std::vector<int> candidates, next;
    for (const auto& [i, j] : edges) {
        if (covered.count(pair_key(i, j, n))) continue;

        std::vector<int> clique{i, j};
        candidates.clear();
        std::set_intersection(adj[i].begin(), adj[i].end(), adj[j].begin(), adj[j].end(),
                              std::back_inserter(candidates));
        while (!candidates.empty()) {
            int best = -1, best_gain = -1;
            for (int v : candidates) {
                int gain = 0;
                for (int u : clique)
                    if (!covered.count(pair_key(u, v, n))) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = v;
                }
            }
            clique.push_back(best);
            next.clear();
            std::set_intersection(candidates.begin(), candidates.end(), adj[best].begin(),
                                  adj[best].end(), std::back_inserter(next));
            next.erase(std::remove(next.begin(), next.end(), best), next.end());
            candidates.swap(next);
        }
        std::sort(clique.begin(), clique.end());
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                covered.insert(pair_key(clique[a], clique[b], n));
        cover.cliques.push_back(std::move(clique));
    }
    return cover;
}

BinarySpectrum cover_to_spectrum(const CliqueCover& cover, int nodes) {
    BinarySpectrum s(nodes, static_cast<int>(cover.cliques.size()));
    for (std::size_t d = 0; d < cover.cliques.size(); ++d)
        for (int j : cover.cliques[d]) {
            if (j < 0 || j >= nodes) throw std::out_of_range("clique node index out of range");
            s.set_bit(j, static_cast<int>(d), true);
        }
    return s;
}

long verify_representation(const BinarySpectrum& s, const Graph& g) {
    if (s.node_count() != g.node_count())
        throw std::invalid_argument("spectrum and graph sizes differ");
    long mismatches = 0;
    for (int i = 0; i < g.node_count(); ++i)
        for (int j = i + 1; j < g.node_count(); ++j) {
            bool actual = g.has_edge(i, j) || g.has_edge(j, i);
            if (s.overlaps(i, j) != actual) ++mismatches;
        }
    return mismatches;
}

std::string save_spectrum(const BinarySpectrum& s) {
    std::string out;
    out.reserve(static_cast<std::size_t>(s.node_count()) * (2 * s.dim_count() + 1));
    for (int j = 0; j < s.node_count(); ++j) {
        for (int d = 0; d < s.dim_count(); ++d) {
            if (d) out += '\t';
            out += s.bit(j, d) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

BinarySpectrum load_spectrum(std::string_view text) {
    std::vector<std::vector<bool>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        if (line.empty()) continue;
        std::vector<bool> row;
        for (char c : line) {
            if (c == '\t' || c == ' ' || c == '\r') continue;
            if (c != '0' && c != '1') throw std::runtime_error("spectrum file: expected 0/1 digits");
            row.push_back(c == '1');
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    int n = static_cast<int>(rows.size());
    int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
    BinarySpectrum s(n, m);
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(rows[j].size()) != m)
            throw std::runtime_error("spectrum file: ragged rows");
        for (int d = 0; d < m; ++d) s.set_bit(j, d, rows[j][d]);
    }
    return s;
}

std::string save_cover(const CliqueCover& cover) {
    std::string out;
    for (const auto& clique : cover.cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(clique[i]);
        }
        out += '\n';
    }
    return out;
}

CliqueCover load_cover(std::string_view text) {
    CliqueCover cover;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        std::vector<int> clique;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
            if (i > start) clique.push_back(std::stoi(std::string(line.substr(start, i - start))));
            else if (i < line.size()) throw std::runtime_error("cover file: expected node indices");
        }
        if (!clique.empty()) cover.cliques.push_back(std::move(clique));
    }
    return cover;
}

}  // namespace sigspec
