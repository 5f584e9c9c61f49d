#include "sigspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sigspec {

Graph::Graph(int nodes, bool directed) : directed_(directed) {
    if (nodes < 0) throw std::invalid_argument("node count must be non-negative");
    labels_.reserve(nodes);
    for (int i = 0; i < nodes; ++i) add_node(std::to_string(i));
}

int Graph::add_node(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    index_.emplace(label, id);
    out_.emplace_back();
    if (directed_) in_.emplace_back();
    return id;
}

int Graph::find_node(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void Graph::check_node(int u) const {
    if (u < 0 || u >= node_count()) throw std::out_of_range("node index out of range");
}

void Graph::add_edge(int u, int v, double weight) {
    check_node(u);
    check_node(v);
    if (!std::isfinite(weight)) throw std::invalid_argument("edge weight must be finite");
    if (u == v) {
        ++dropped_loops_;
        return;
    }
    bool fresh = out_[u].insert_or_assign(v, weight).second;
    if (directed_) {
        in_[v].insert_or_assign(u, weight);
    } else {
        out_[v].insert_or_assign(u, weight);
    }
    if (fresh) ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return out_[u].count(v) != 0;
}

double Graph::weight(int u, int v) const {
    check_node(u);
    check_node(v);
    auto it = out_[u].find(v);
    return it == out_[u].end() ? 0.0 : it->second;
}

const std::map<int, double>& Graph::neighbors(int u) const {
    check_node(u);
    return out_[u];
}

const std::map<int, double>& Graph::in_neighbors(int u) const {
    check_node(u);
    return directed_ ? in_[u] : out_[u];
}

const std::string& Graph::label(int u) const {
    check_node(u);
    return labels_[u];
}

std::vector<std::vector<int>> Graph::undirected_adjacency() const {
    std::vector<std::vector<int>> adj(node_count());
    for (int u = 0; u < node_count(); ++u) {
        for (const auto& [v, w] : out_[u]) {
            (void)w;
            adj[u].push_back(v);
            if (directed_) adj[v].push_back(u);
        }
    }
    if (directed_) {
        for (auto& row : adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }
    return adj;
}

bool Graph::is_unit_weighted() const {
    for (int u = 0; u < node_count(); ++u)
        for (const auto& [v, w] : out_[u]) {
            (void)v;
            if (w != 1.0) return false;
        }
    return true;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

double parse_weight(std::string_view tok, std::size_t line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse weight '" +
                                 std::string(tok) + "'");
    if (!std::isfinite(w))
        throw std::runtime_error("line " + std::to_string(line_no) + ": weight is not finite");
    return w;
}

}  // namespace

Graph load_edge_list(std::string_view text, bool directed) {
    Graph g(directed);
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos
                                                                               : end - pos);
        ++line_no;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() < 2 || tokens.size() > 3)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'u v' or 'u v w'");
        int u = g.add_node(std::string(tokens[0]));
        int v = g.add_node(std::string(tokens[1]));
        double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
        g.add_edge(u, v, w);
    }
    return g;
}

std::string save_edge_list(const Graph& g) {
    std::string out;
    for (int u = 0; u < g.node_count(); ++u) {
        for (const auto& [v, w] : g.neighbors(u)) {
            if (!g.directed() && v < u) continue;
            out += g.label(u);
            out += '\t';
            out += g.label(v);
            out += '\t';
            out += format_double(w);
            out += '\n';
        }
    }
    return out;
}

Graph load_edge_list_file(const std::string& path, bool directed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_edge_list(ss.str(), directed);
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << save_edge_list(g);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Degrees degrees(const Graph& g) {
    Degrees d;
    d.out_strength.assign(g.node_count(), 0.0);
    d.in_strength.assign(g.node_count(), 0.0);
    for (int u = 0; u < g.node_count(); ++u) {
        for (const auto& [v, w] : g.neighbors(u)) {
            d.out_strength[u] += w;
            d.in_strength[v] += w;
        }
    }
    return d;
}

Components connected_components(const Graph& g) {
    int n = g.node_count();
    auto adj = g.undirected_adjacency();
    Components comp;
    comp.label.assign(n, -1);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (comp.label[s] != -1) continue;
        int id = static_cast<int>(sizes.size());
        int size = 0;
        std::deque<int> queue{s};
        comp.label[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++size;
            for (int v : adj[u])
                if (comp.label[v] == -1) {
                    comp.label[v] = id;
                    queue.push_back(v);
                }
        }
        sizes.push_back(size);
    }
    // Relabel so that ids are ordered by decreasing size.
    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[a] > sizes[b]; });
    std::vector<int> remap(sizes.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) remap[order[rank]] = static_cast<int>(rank);
    for (int& l : comp.label) l = remap[l];
    comp.sizes.resize(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) comp.sizes[remap[i]] = sizes[i];
    return comp;
}

DistanceReport distance_metrics(const Graph& g) {
    DistanceReport report;
    int n = g.node_count();
    if (n == 0) return report;

    auto comps = connected_components(g);
    report.component_size = comps.sizes[0];
    if (report.component_size < 2) return report;

    auto adj = g.undirected_adjacency();
    std::vector<int> dist(n);
    long long total = 0, pairs = 0;
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (comps.label[s] != 0) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (v == s || comps.label[v] != 0) continue;
            total += dist[v];
            ++pairs;
            report.max_distance = std::max(report.max_distance, dist[v]);
        }
    }
    // Ordered-pair mean equals the unordered-distinct-pair mean here.
    report.avg_distance = static_cast<double>(total) / static_cast<double>(pairs);
    return report;
}

namespace {

// Zachary karate club, canonical 78-edge version, zero-indexed.
constexpr int kKarateEdges[][2] = {
    {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
    {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
    {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
    {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
    {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
    {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
    {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
    {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
    {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
    {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
};

}  // namespace

Graph karate_club() {
    Graph g(34, false);
    for (const auto& e : kKarateEdges) g.add_edge(e[0], e[1], 1.0);
    return g;
}

}  // namespace sigspec
