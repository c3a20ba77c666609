#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "specgw/graph.hpp"

namespace specgw {

struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;
};

/// Stochastic block model: within-block edges with probability p_in,
/// cross-block with p_out. Undirected, seeded, no self-loops.
LabeledGraph generate_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                          std::uint64_t seed);

/// SBM with a full per-block-pair probability matrix (diagonal = within).
LabeledGraph generate_sbm(const std::vector<int>& block_sizes,
                          const Eigen::MatrixXd& block_probs, std::uint64_t seed);

/// Gaussian random partition model: cluster sizes drawn from a Gaussian
/// with the given mean and variance mean/2, truncated at 1, with the last
/// cluster adjusted so sizes total n. Edges sampled as in the SBM, with
/// optional direction.
LabeledGraph generate_gaussian_random_partition(int n, int mean_cluster, double p_in,
                                                double p_out, bool directed,
                                                std::uint64_t seed);

}  // namespace specgw
