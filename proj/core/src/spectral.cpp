#include "specgw/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace specgw {

Spectrum eigendecompose(const Eigen::MatrixXd& L) {
    if (L.rows() != L.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
    if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("eigendecompose: matrix not symmetric within 1e-8");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (L + L.transpose()));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: eigensolver failed");

    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    // Sign convention: largest-|entry| coordinate positive, ties by lowest index.
    const int n = s.size();
    for (int j = 0; j < n; ++j) {
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            double a = std::abs(s.eigenvectors(i, j));
            if (a > best + 1e-15) {
                best = a;
                arg = i;
            }
        }
        if (s.eigenvectors(arg, j) < 0.0) s.eigenvectors.col(j) = -s.eigenvectors.col(j);
    }
    return s;
}

Spectrum graph_spectrum(const Graph& g, LaplacianKind kind) {
    return eigendecompose(laplacian(g, kind));
}

HeatKernel heat_kernel(const Spectrum& s, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_kernel: diffusion time must be nonnegative");
    const int n = s.size();
    if (t == 0.0) return HeatKernel{Eigen::MatrixXd::Identity(n, n), 0.0};
    Eigen::VectorXd w = (-t * s.eigenvalues.array()).exp();
    Eigen::MatrixXd K = s.eigenvectors * w.asDiagonal() * s.eigenvectors.transpose();
    K = 0.5 * (K + K.transpose()).eval();
    return HeatKernel{std::move(K), t};
}

Eigen::MatrixXd centered_heat_kernel(const Spectrum& s, double t) {
    if (t < 0.0)
        throw std::invalid_argument("centered_heat_kernel: diffusion time must be nonnegative");
    const int n = s.size();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd phi = s.eigenvectors.col(j);
        double colsum = phi.sum();
        Eigen::MatrixXd mode = phi * phi.transpose() - (colsum * colsum / (n * double(n))) * ones;
        // A constant eigenvector centers to exact zero; skip its roundoff
        // residue so it cannot drown small modes.
        if (mode.cwiseAbs().maxCoeff() < 1e-12) continue;
        K += std::exp(-t * s.eigenvalues[j]) * mode;
    }
    return 0.5 * (K + K.transpose()).eval();
}

}  // namespace specgw
