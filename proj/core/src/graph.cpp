#include "specgw/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace specgw {

namespace {

Graph finish_graph(int n, std::vector<std::pair<int, int>> raw_edges, bool directed,
                   std::vector<std::string> ids) {
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : raw_edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge references node index out of range");
        if (u == v && !directed)
            throw std::invalid_argument("graph: self-loop not allowed in an undirected graph");
        if (!directed && u > v) std::swap(u, v);
        dedup.emplace(u, v);
    }
    Graph g;
    g.n = n;
    g.directed = directed;
    g.edges.assign(dedup.begin(), dedup.end());
    if (ids.empty()) {
        ids.reserve(n);
        for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    }
    g.node_ids = std::move(ids);
    return g;
}

std::vector<std::vector<int>> neighbor_lists(const Graph& g, bool reverse) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        if (g.directed) {
            if (reverse)
                adj[v].push_back(u);
            else
                adj[u].push_back(v);
        } else {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    return adj;
}

int reachable_count(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count;
}

}  // namespace

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list,
                  bool directed) {
    if (edge_list.empty()) throw std::invalid_argument("build_graph: empty edge list");
    std::unordered_map<std::string, int> index;
    std::vector<std::string> ids;
    auto intern = [&](const std::string& id) {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        int k = static_cast<int>(ids.size());
        index.emplace(id, k);
        ids.push_back(id);
        return k;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) edges.emplace_back(intern(a), intern(b));
    return finish_graph(static_cast<int>(ids.size()), std::move(edges), directed, std::move(ids));
}

Graph build_graph(const std::vector<std::pair<long, long>>& edge_list, bool directed) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(edge_list.size());
    for (auto [a, b] : edge_list) named.emplace_back(std::to_string(a), std::to_string(b));
    return build_graph(named, directed);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges, bool directed) {
    if (n <= 0) throw std::invalid_argument("make_graph: node count must be positive");
    return finish_graph(n, std::move(edges), directed, {});
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n, g.n);
    for (auto [u, v] : g.edges) {
        A(u, v) = 1.0;
        if (!g.directed) A(v, u) = 1.0;
    }
    return A;
}

Eigen::VectorXd out_degrees(const Graph& g) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(g.n);
    for (auto [u, v] : g.edges) {
        d[u] += 1.0;
        if (!g.directed) d[v] += 1.0;
    }
    return d;
}

Eigen::VectorXd in_degrees(const Graph& g) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(g.n);
    for (auto [u, v] : g.edges) {
        d[v] += 1.0;
        if (!g.directed) d[u] += 1.0;
    }
    return d;
}

Eigen::VectorXd total_degrees(const Graph& g) {
    if (!g.directed) return out_degrees(g);
    return out_degrees(g) + in_degrees(g);
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return reachable_count(adj, 0) == g.n;
}

bool is_strongly_connected(const Graph& g) {
    if (g.n == 0) return false;
    if (!g.directed) return is_connected(g);
    return reachable_count(neighbor_lists(g, false), 0) == g.n &&
           reachable_count(neighbor_lists(g, true), 0) == g.n;
}

Graph relabel_graph(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("relabel_graph: permutation length mismatch");
    std::vector<char> seen(g.n, 0);
    for (int p : perm) {
        if (p < 0 || p >= g.n || seen[p])
            throw std::invalid_argument("relabel_graph: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    Graph out = finish_graph(g.n, std::move(edges), g.directed, {});
    out.node_ids.assign(g.n, "");
    for (int v = 0; v < g.n; ++v) out.node_ids[perm[v]] = g.node_ids[v];
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("induced_subgraph: empty node set");
    std::unordered_map<int, int> pos;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        int v = nodes[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: node out of range");
        if (!pos.emplace(v, i).second)
            throw std::invalid_argument("induced_subgraph: duplicate node");
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        auto iu = pos.find(u), iv = pos.find(v);
        if (iu != pos.end() && iv != pos.end()) edges.emplace_back(iu->second, iv->second);
    }
    Graph out = finish_graph(static_cast<int>(nodes.size()), std::move(edges), g.directed, {});
    for (int i = 0; i < out.n; ++i) out.node_ids[i] = g.node_ids[nodes[i]];
    return out;
}

std::vector<double> betweenness_centrality(const Graph& g) {
    auto adj = neighbor_lists(g, false);
    std::vector<double> cb(g.n, 0.0);
    // Brandes accumulation, one BFS per source.
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> order;
        std::vector<std::vector<int>> preds(g.n);
        std::vector<double> sigma(g.n, 0.0);
        std::vector<int> dist(g.n, -1);
        sigma[s] = 1.0;
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        std::vector<double> delta(g.n, 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) cb[w] += delta[w];
        }
    }
    if (!g.directed)
        for (double& c : cb) c /= 2.0;
    return cb;
}

}  // namespace specgw
