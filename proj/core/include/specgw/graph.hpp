#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace specgw {

/// Finite unweighted graph, possibly directed. Node ids are dense indices
/// 0..n-1; the original (string) ids survive in `node_ids` for file I/O.
/// Undirected edges are stored once with i < j.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool directed = false;
    std::vector<std::string> node_ids;

    int edge_count() const { return static_cast<int>(edges.size()); }
    const std::string& id_of(int v) const { return node_ids[v]; }
};

/// Builds a graph from raw id pairs. Ids are mapped to dense indices in
/// first-appearance order, duplicate edges collapse, and self-loops are
/// rejected in undirected mode.
Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list,
                  bool directed);

/// Same, for callers that already hold integer ids (still mapped in
/// first-appearance order, not numeric order).
Graph build_graph(const std::vector<std::pair<long, long>>& edge_list, bool directed);

/// Constructs a graph directly on indices 0..n-1. Validates ranges,
/// collapses duplicates, rejects undirected self-loops.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges, bool directed);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Undirected degree, or out-degree / in-degree / their sum for digraphs.
Eigen::VectorXd out_degrees(const Graph& g);
Eigen::VectorXd in_degrees(const Graph& g);
Eigen::VectorXd total_degrees(const Graph& g);

/// Connectivity ignoring edge direction.
bool is_connected(const Graph& g);
bool is_strongly_connected(const Graph& g);

/// Relabels nodes: node v of the input becomes node perm[v].
Graph relabel_graph(const Graph& g, const std::vector<int>& perm);

/// Induced subgraph on the given (distinct) nodes, in the order given.
Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes);

/// Brandes betweenness centrality (unweighted shortest paths).
std::vector<double> betweenness_centrality(const Graph& g);

}  // namespace specgw
