#pragma once

#include <Eigen/Dense>

#include "specgw/graph.hpp"
#include "specgw/laplacian.hpp"

namespace specgw {

/// Eigendecomposition L = Phi Lambda Phi^T with eigenvalues ascending and a
/// deterministic eigenvector sign convention (largest-magnitude entry
/// positive, ties broken by lowest index).
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Requires L symmetric within 1e-8.
Spectrum eigendecompose(const Eigen::MatrixXd& L);

Spectrum graph_spectrum(const Graph& g, LaplacianKind kind);

/// K^t = exp(-t L) = Phi exp(-t Lambda) Phi^T.
struct HeatKernel {
    Eigen::MatrixXd matrix;
    double time = 0.0;
};

/// t = 0 yields the identity; t < 0 is an error.
HeatKernel heat_kernel(const Spectrum& s, double t);

/// K^t minus the all-ones rank-one matrix scaled by the entrywise mean of
/// K^t, assembled mode by mode so that small eigenmodes survive in floating
/// point even when they are far below the mean entry. Replacing a
/// representation matrix F by F - c*ones shifts every GW loss over a fixed
/// coupling polytope by the same constant, so optimizing against the
/// centered kernel selects exactly the same couplings as the plain kernel.
Eigen::MatrixXd centered_heat_kernel(const Spectrum& s, double t);

}  // namespace specgw
