#include "specgw/generators.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "specgw/rng.hpp"

namespace specgw {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

LabeledGraph sample_block_graph(const std::vector<int>& block_sizes,
                                const Eigen::MatrixXd& probs, bool directed,
                                std::uint64_t seed) {
    const int blocks = static_cast<int>(block_sizes.size());
    if (blocks == 0) throw std::invalid_argument("block model: no blocks");
    for (int s : block_sizes)
        if (s < 1) throw std::invalid_argument("block model: block sizes must be >= 1");
    if (probs.rows() != blocks || probs.cols() != blocks)
        throw std::invalid_argument("block model: probability matrix shape mismatch");
    for (int a = 0; a < blocks; ++a)
        for (int b = 0; b < blocks; ++b) check_probability(probs(a, b), "edge probability");

    std::vector<int> labels;
    for (int b = 0; b < blocks; ++b) labels.insert(labels.end(), block_sizes[b], b);
    const int n = static_cast<int>(labels.size());

    auto rng = make_engine(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    if (directed) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (unif(rng) < probs(labels[i], labels[j])) edges.emplace_back(i, j);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (unif(rng) < probs(labels[i], labels[j])) edges.emplace_back(i, j);
    }
    return LabeledGraph{make_graph(n, std::move(edges), directed), std::move(labels)};
}

Eigen::MatrixXd two_level_probs(int blocks, double p_in, double p_out) {
    Eigen::MatrixXd probs = Eigen::MatrixXd::Constant(blocks, blocks, p_out);
    probs.diagonal().setConstant(p_in);
    return probs;
}

}  // namespace

LabeledGraph generate_sbm(const std::vector<int>& block_sizes, double p_in, double p_out,
                          std::uint64_t seed) {
    check_probability(p_in, "p_in");
    check_probability(p_out, "p_out");
    return sample_block_graph(block_sizes,
                              two_level_probs(static_cast<int>(block_sizes.size()), p_in, p_out),
                              false, seed);
}

LabeledGraph generate_sbm(const std::vector<int>& block_sizes,
                          const Eigen::MatrixXd& block_probs, std::uint64_t seed) {
    return sample_block_graph(block_sizes, block_probs, false, seed);
}

LabeledGraph generate_gaussian_random_partition(int n, int mean_cluster, double p_in,
                                                double p_out, bool directed,
                                                std::uint64_t seed) {
    if (n < 1 || mean_cluster < 1 || mean_cluster > n)
        throw std::invalid_argument("gaussian random partition: need n >= mean_cluster >= 1");
    check_probability(p_in, "p_in");
    check_probability(p_out, "p_out");

    auto rng = make_engine(derive_seed(seed, 0));
    std::normal_distribution<double> size_dist(static_cast<double>(mean_cluster),
                                               std::sqrt(mean_cluster / 2.0));
    std::vector<int> sizes;
    int total = 0;
    while (total < n) {
        int s = std::max(1, static_cast<int>(std::lround(size_dist(rng))));
        sizes.push_back(s);
        total += s;
    }
    // Adjust the last cluster so the sizes total n; fold it into its
    // predecessor if the adjustment empties it.
    sizes.back() -= total - n;
    while (sizes.back() < 1) {
        int shortfall = sizes.back();
        sizes.pop_back();
        if (sizes.empty())
            throw std::invalid_argument("gaussian random partition: n too small");
        sizes.back() += shortfall;
    }

    return sample_block_graph(sizes,
                              two_level_probs(static_cast<int>(sizes.size()), p_in, p_out),
                              directed, derive_seed(seed, 1));
}

}  // namespace specgw
