#pragma once

#include <Eigen/Dense>

#include "specgw/measures.hpp"

namespace specgw {

/// Exact minimizer of <cost, C> over the transportation polytope C(p, q),
/// returned as a vertex: the support is a spanning forest of the bipartite
/// supply/demand graph, so at most m+n-1 entries are nonzero and all other
/// entries are exactly zero.
Eigen::MatrixXd solve_linear_ot(const Eigen::MatrixXd& cost, const Eigen::VectorXd& p,
                                const Eigen::VectorXd& q);

Coupling solve_linear_ot(const Eigen::MatrixXd& cost, const NodeDistribution& p,
                         const NodeDistribution& q);

}  // namespace specgw
