#ifndef SIGSPEC_GRAPH_HPP
#define SIGSPEC_GRAPH_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sigspec {

/// Node-indexed weighted edge structure. Nodes carry arbitrary string labels
/// mapped to dense indices 0..n-1 in first-appearance order. Self-loops are
/// never stored; attempts to add one are counted in dropped_loops().
class Graph {
public:
    explicit Graph(bool directed = false) : directed_(directed) {}

    /// Graph on `nodes` unlabeled nodes (labels are the decimal indices).
    Graph(int nodes, bool directed);

    /// Index of `label`, creating the node if it is new.
    int add_node(const std::string& label);

    /// Index of `label`, or -1 when absent.
    int find_node(const std::string& label) const;

    /// Inserts or overwrites an edge. Loops are dropped and counted. The
    /// weight must be finite; negative weights are allowed.
    void add_edge(int u, int v, double weight = 1.0);

    int node_count() const { return static_cast<int>(labels_.size()); }
    bool directed() const { return directed_; }

    /// Number of stored edges: unordered pairs when undirected, ordered
    /// pairs when directed.
    std::size_t edge_count() const { return edge_count_; }

    long dropped_loops() const { return dropped_loops_; }

    bool has_edge(int u, int v) const;
    double weight(int u, int v) const;  // 0.0 when the edge is absent

    /// Out-neighborhood of u (all neighbors when undirected), keyed by
    /// neighbor index, so iteration order is deterministic.
    const std::map<int, double>& neighbors(int u) const;

    /// In-neighborhood of u; equals neighbors(u) when undirected.
    const std::map<int, double>& in_neighbors(int u) const;

    const std::string& label(int u) const;

    /// Direction-ignoring adjacency lists (for BFS style traversals).
    std::vector<std::vector<int>> undirected_adjacency() const;

    /// True when every stored weight equals 1.0.
    bool is_unit_weighted() const;

private:
    void check_node(int u) const;

    bool directed_ = false;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::map<int, double>> out_;
    std::vector<std::map<int, double>> in_;  // populated only when directed
    std::size_t edge_count_ = 0;
    long dropped_loops_ = 0;
};

/// Largest-component distance summary. Distances are unit hop counts,
/// direction ignored. A component of size 1 yields avg = 0, max = 0.
struct DistanceReport {
    int component_size = 0;
    double avg_distance = 0.0;  // mean over unordered distinct pairs
    int max_distance = 0;       // diameter of the largest component
};

struct Degrees {
    std::vector<double> out_strength;
    std::vector<double> in_strength;
};

/// Weak connectivity labeling. Component ids are dense, 0 is the largest
/// component (ties broken by discovery order); sizes[id] matches.
struct Components {
    std::vector<int> label;
    std::vector<int> sizes;  // sorted descending
};

/// Parses an edge-list document: one edge per line, "u v" or "u v w",
/// whitespace separated, '#' lines are comments. Missing weights default
/// to 1.0. Self-loop lines are dropped and counted. Duplicate pairs
/// overwrite with the last weight.
/// Throws std::runtime_error naming the line for malformed input.
Graph load_edge_list(std::string_view text, bool directed = false);

/// Writer counterpart: "u<TAB>v<TAB>w" with shortest round-trip weights,
/// symmetric pairs written once for undirected graphs.
std::string save_edge_list(const Graph& g);

Graph load_edge_list_file(const std::string& path, bool directed = false);
void save_edge_list_file(const Graph& g, const std::string& path);

/// Weighted out/in strengths; the two vectors are equal for undirected
/// graphs.
Degrees degrees(const Graph& g);

Components connected_components(const Graph& g);

/// BFS from every node of the largest weak component.
DistanceReport distance_metrics(const Graph& g);

/// The Zachary karate club network: 34 nodes, 78 unit-weight edges.
Graph karate_club();

/// Shortest round-trip decimal formatting ("." separator, locale free).
std::string format_double(double value);

}  // namespace sigspec

#endif
