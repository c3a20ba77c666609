#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "specgw/measures.hpp"

namespace specgw {

/// Hit-and-run Markov chain over the coupling polytope C(p, q). The basis of
/// the constraint row space is computed once and cached; each step projects
/// a Gaussian direction onto the affine hull, finds the feasible chord and
/// jumps to a uniform point on it.
struct SamplerState {
    Eigen::MatrixXd constraint_matrix;  // (m+n-1) x (m*n), one redundant row dropped
    Eigen::MatrixXd row_space_basis;    // (m*n) x (m+n-1), orthonormal columns
    Coupling current;
    std::mt19937_64 rng;
    std::uint64_t seed = 0;
};

SamplerState make_sampler(const NodeDistribution& p, const NodeDistribution& q,
                          std::uint64_t seed);

/// One hit-and-run step, in place. Degenerate projected directions are
/// retried with fresh draws, up to 32 times.
void mcmc_step(SamplerState& state);

/// Runs the chain from the product coupling and keeps every
/// steps_between-th state, n_samples times.
std::vector<Coupling> sample_couplings(const NodeDistribution& p, const NodeDistribution& q,
                                       int n_samples, int steps_between, std::uint64_t seed);

}  // namespace specgw
