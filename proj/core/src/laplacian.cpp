#include "specgw/laplacian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace specgw {

Eigen::VectorXd perron_vector(const Graph& g) {
    if (!g.directed) throw std::invalid_argument("perron_vector: graph must be directed");
    if (!is_strongly_connected(g))
        throw std::invalid_argument("perron_vector: graph must be strongly connected");
    const int n = g.n;
    Eigen::VectorXd dout = out_degrees(g);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges) P(u, v) = 1.0 / dout[u];

    // Power iteration on the lazy chain (P + I)/2; same fixed point, but
    // converges for periodic chains as well.
    Eigen::VectorXd psi = Eigen::VectorXd::Constant(n, 1.0 / n);
    const double tol = 1e-12;
    const int max_iters = 10000;
    for (int it = 0; it < max_iters; ++it) {
        Eigen::VectorXd next = 0.5 * (P.transpose() * psi + psi);
        next /= next.sum();
        double delta = (next - psi).cwiseAbs().maxCoeff();
        psi = next;
        if (delta < tol) return psi;
    }
    throw std::runtime_error("perron_vector: power iteration did not converge");
}

Eigen::MatrixXd laplacian(const Graph& g, LaplacianKind kind) {
    const int n = g.n;
    switch (kind) {
        case LaplacianKind::Standard: {
            if (g.directed)
                throw std::invalid_argument("laplacian: Standard requires an undirected graph");
            Eigen::MatrixXd A = adjacency_matrix(g);
            return Eigen::MatrixXd(out_degrees(g).asDiagonal()) - A;
        }
        case LaplacianKind::Normalized: {
            if (g.directed)
                throw std::invalid_argument("laplacian: Normalized requires an undirected graph");
            Eigen::VectorXd d = out_degrees(g);
            if ((d.array() <= 0.0).any())
                throw std::invalid_argument(
                    "laplacian: Normalized undefined for graphs with isolated nodes");
            Eigen::VectorXd dinv_sqrt = d.array().rsqrt();
            Eigen::MatrixXd A = adjacency_matrix(g);
            Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n) -
                                dinv_sqrt.asDiagonal() * A * dinv_sqrt.asDiagonal();
            return 0.5 * (L + L.transpose());
        }
        case LaplacianKind::DirectedChung: {
            if (!g.directed)
                throw std::invalid_argument("laplacian: DirectedChung requires a directed graph");
            Eigen::VectorXd psi = perron_vector(g);
            Eigen::VectorXd dout = out_degrees(g);
            Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
            for (auto [u, v] : g.edges) P(u, v) = 1.0 / dout[u];
            Eigen::VectorXd s = psi.array().sqrt();
            Eigen::VectorXd sinv = s.cwiseInverse();
            Eigen::MatrixXd M = s.asDiagonal() * P * sinv.asDiagonal();
            Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n) - 0.5 * (M + M.transpose());
            return 0.5 * (L + L.transpose());
        }
    }
    throw std::invalid_argument("laplacian: unknown kind");
}

const char* laplacian_kind_name(LaplacianKind kind) {
    switch (kind) {
        case LaplacianKind::Standard: return "standard";
        case LaplacianKind::Normalized: return "normalized";
        case LaplacianKind::DirectedChung: return "chung";
    }
    return "unknown";
}

LaplacianKind laplacian_kind_from_name(const std::string& name) {
    if (name == "standard") return LaplacianKind::Standard;
    if (name == "normalized") return LaplacianKind::Normalized;
    if (name == "chung") return LaplacianKind::DirectedChung;
    throw std::invalid_argument("unknown laplacian kind: " + name);
}

}  // namespace specgw
