#pragma once

#include <Eigen/Dense>

#include "specgw/graph.hpp"

namespace specgw {

/// Fully supported probability vector on the nodes of a graph. When built
/// from degrees, (a, b) record the interpolation parameters.
struct NodeDistribution {
    Eigen::VectorXd weights;
    double a = 0.0;
    double b = 0.0;

    int size() const { return static_cast<int>(weights.size()); }
};

NodeDistribution uniform_distribution(int n);

/// p_j proportional to (deg(v_j) + a)^b; directed graphs use in + out
/// degree. b = 0 gives the uniform distribution exactly.
NodeDistribution node_distribution(const Graph& g, double a, double b);

/// Joint probability matrix with prescribed marginals.
struct Coupling {
    Eigen::MatrixXd matrix;
    NodeDistribution row_marginal;
    NodeDistribution col_marginal;

    int rows() const { return static_cast<int>(matrix.rows()); }
    int cols() const { return static_cast<int>(matrix.cols()); }
};

Coupling product_coupling(const NodeDistribution& p, const NodeDistribution& q);

/// Wraps an explicit matrix, checking the marginal and sign constraints
/// (row/col sums within 1e-9, entries >= -1e-12).
Coupling coupling_from_matrix(Eigen::MatrixXd m, NodeDistribution p, NodeDistribution q);

/// Largest absolute row/column sum violation against the stored marginals.
double coupling_marginal_error(const Coupling& c);

/// Identity-permutation coupling between equal-size distributions
/// (well-defined as a coupling only when p == q).
Coupling identity_coupling(const NodeDistribution& p);

}  // namespace specgw
