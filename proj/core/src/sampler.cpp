#include "specgw/sampler.hpp"

#include <limits>
#include <stdexcept>

#include "specgw/rng.hpp"

namespace specgw {

namespace {

// Marginal constraints in col-major vec order: m row sums plus the first
// n-1 column sums. The last column sum is implied by the others.
Eigen::MatrixXd marginal_constraints(int m, int n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + n - 1, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j * m + i) = 1.0;
    for (int j = 0; j + 1 < n; ++j)
        for (int i = 0; i < m; ++i) a(m + j, j * m + i) = 1.0;
    return a;
}

}  // namespace

SamplerState make_sampler(const NodeDistribution& p, const NodeDistribution& q,
                          std::uint64_t seed) {
    const int m = p.size(), n = q.size();
    SamplerState state;
    state.constraint_matrix = marginal_constraints(m, n);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(state.constraint_matrix.transpose());
    state.row_space_basis =
        qr.householderQ() * Eigen::MatrixXd::Identity(m * n, m + n - 1);
    state.current = product_coupling(p, q);
    state.seed = seed;
    state.rng = make_engine(seed);
    return state;
}

void mcmc_step(SamplerState& state) {
    const int m = state.current.rows(), n = state.current.cols();
    // One-dimensional marginals pin the polytope to a single point.
    if ((m - 1) * (n - 1) == 0) return;

    std::normal_distribution<double> gauss(0.0, 1.0);
    const int max_retries = 32;
    Eigen::MatrixXd& c = state.current.matrix;

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Eigen::MatrixXd v(m, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) v(i, j) = gauss(state.rng);

        Eigen::Map<Eigen::VectorXd> vec(v.data(), m * n);
        vec -= state.row_space_basis * (state.row_space_basis.transpose() * vec);
        double vmax = v.cwiseAbs().maxCoeff();
        if (vmax < 1e-12) continue;

        double alpha = -std::numeric_limits<double>::infinity();
        double beta = std::numeric_limits<double>::infinity();
        const double cutoff = 1e-14 * vmax;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) {
                double vij = v(i, j);
                if (vij > cutoff)
                    alpha = std::max(alpha, -c(i, j) / vij);
                else if (vij < -cutoff)
                    beta = std::min(beta, -c(i, j) / vij);
            }
        // The polytope is bounded, so a nonzero in-hull direction always has
        // entries of both signs.
        if (!std::isfinite(alpha) || !std::isfinite(beta)) continue;
        alpha = std::min(alpha, 0.0);
        beta = std::max(beta, 0.0);

        double gamma = std::uniform_real_distribution<double>(alpha, beta)(state.rng);
        c += gamma * v;
        c = c.cwiseMax(0.0);
        return;
    }
    throw std::runtime_error("mcmc_step: degenerate projected direction after 32 retries");
}

std::vector<Coupling> sample_couplings(const NodeDistribution& p, const NodeDistribution& q,
                                       int n_samples, int steps_between, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("sample_couplings: n_samples must be >= 1");
    if (steps_between < 1)
        throw std::invalid_argument("sample_couplings: steps_between must be >= 1");
    SamplerState state = make_sampler(p, q, seed);
    std::vector<Coupling> samples;
    samples.reserve(n_samples);
    for (int s = 0; s < n_samples; ++s) {
        for (int k = 0; k < steps_between; ++k) mcmc_step(state);
        samples.push_back(state.current);
    }
    return samples;
}

}  // namespace specgw
