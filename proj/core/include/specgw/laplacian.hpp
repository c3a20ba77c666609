#pragma once

#include <Eigen/Dense>

#include "specgw/graph.hpp"

namespace specgw {

/// Which Laplacian to build. Standard and Normalized apply to undirected
/// graphs; DirectedChung applies to strongly connected digraphs.
enum class LaplacianKind { Standard, Normalized, DirectedChung };

/// D - A, I - D^{-1/2} A D^{-1/2}, or Chung's symmetrized random-walk
/// Laplacian I - (Psi^{1/2} P Psi^{-1/2} + Psi^{-1/2} P^T Psi^{1/2}) / 2,
/// where P is the out-degree transition matrix and psi its left Perron
/// vector normalized to sum 1.
Eigen::MatrixXd laplacian(const Graph& g, LaplacianKind kind);

/// Left Perron vector of the out-degree transition matrix, sum 1.
Eigen::VectorXd perron_vector(const Graph& g);

const char* laplacian_kind_name(LaplacianKind kind);
LaplacianKind laplacian_kind_from_name(const std::string& name);

}  // namespace specgw
