#include "specgw/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace specgw {

NodeDistribution uniform_distribution(int n) {
    if (n < 1) throw std::invalid_argument("uniform_distribution: size must be positive");
    return NodeDistribution{Eigen::VectorXd::Constant(n, 1.0 / n), 0.0, 0.0};
}

NodeDistribution node_distribution(const Graph& g, double a, double b) {
    if (a < 0.0) throw std::invalid_argument("node_distribution: a must be nonnegative");
    if (b < 0.0 || b > 1.0) throw std::invalid_argument("node_distribution: b must lie in [0, 1]");
    Eigen::VectorXd deg = total_degrees(g);
    if (b > 0.0 && a == 0.0 && (deg.array() <= 0.0).any())
        throw std::invalid_argument(
            "node_distribution: zero-degree node needs a > 0 for full support");
    Eigen::VectorXd w(g.n);
    for (int i = 0; i < g.n; ++i) w[i] = b == 0.0 ? 1.0 : std::pow(deg[i] + a, b);
    w /= w.sum();
    return NodeDistribution{std::move(w), a, b};
}

Coupling product_coupling(const NodeDistribution& p, const NodeDistribution& q) {
    return Coupling{p.weights * q.weights.transpose(), p, q};
}

Coupling coupling_from_matrix(Eigen::MatrixXd m, NodeDistribution p, NodeDistribution q) {
    if (m.rows() != p.size() || m.cols() != q.size())
        throw std::invalid_argument("coupling: matrix shape does not match marginals");
    if (m.minCoeff() < -1e-12)
        throw std::invalid_argument("coupling: negative entry");
    Coupling c{std::move(m), std::move(p), std::move(q)};
    if (coupling_marginal_error(c) > 1e-9)
        throw std::invalid_argument("coupling: marginal constraint violated beyond 1e-9");
    return c;
}

double coupling_marginal_error(const Coupling& c) {
    double row = (c.matrix.rowwise().sum() - c.row_marginal.weights).cwiseAbs().maxCoeff();
    double col =
        (c.matrix.colwise().sum().transpose() - c.col_marginal.weights).cwiseAbs().maxCoeff();
    return std::max(row, col);
}

Coupling identity_coupling(const NodeDistribution& p) {
    Eigen::MatrixXd m = p.weights.asDiagonal();
    return Coupling{std::move(m), p, p};
}

}  // namespace specgw
