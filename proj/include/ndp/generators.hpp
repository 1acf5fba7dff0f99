#pragma once

#include <cstdint>
#include <vector>

#include "ndp/graph.hpp"

namespace ndp::gen {

/// Unit-weight lattice with 4-neighborhood connectivity. rows, cols ≥ 2.
Graph grid(std::size_t rows, std::size_t cols);

/// Unit-weight cycle; n = 2 degenerates to a single edge. n ≥ 2.
Graph ring(std::size_t n);

/// Stochastic block model: unit edges sampled independently, probability
/// p_in within a block and p_out across blocks.
Graph sbm(const std::vector<std::size_t>& block_sizes, double p_in, double p_out,
          std::uint64_t seed);

/// n uniform points in the unit square, symmetrized (union) k-nearest
/// neighbor edges with Gaussian weights exp(−‖p_i − p_j‖²/σ²).
/// sigma ≤ 0 selects the default: the mean kNN distance of the sample.
Graph sensor(std::size_t n, std::size_t k, double sigma, std::uint64_t seed);

/// G(n, p).
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Equal-size communities, each pre-connected by a random spanning tree,
/// then SBM-style probabilistic edges on top.
Graph community(std::size_t n, std::size_t n_communities, double p_in, double p_out,
                std::uint64_t seed);

/// One point of the densification experiment: cut sizes as edges are added
/// to an initially bipartite graph until it is complete.
struct DensifyRecord {
    double density = 0.0;        // edges / (n(n−1)/2)
    double spectral_gamma = 0.0;
    double random_gamma = 0.0;   // mean over kRandomCutDraws seeded draws
    double upper_bound = 0.0;    // λ_s_max / 2
    double trevisan_line = 0.0;  // constant 1 − τ
};

inline constexpr std::size_t kRandomCutDraws = 10;

/// Starting from a connected bipartite graph, adds uniformly random batches
/// of absent unit edges until complete, recording `steps` rows in total
/// (the first is the untouched input, the last the complete graph).
/// Throws when g is not bipartite or not connected.
std::vector<DensifyRecord> densify_sweep(const Graph& g, std::size_t steps,
                                         std::uint64_t seed);

/// One point of the sparsification experiment.
struct EpsilonRecord {
    double epsilon = 0.0;
    /// Spectral distance between the Laplacians of A and sparsify(A, ε);
    /// +inf when fewer than k nonzero eigenvalues survive.
    double spectral_distance = 0.0;
    std::size_t edge_count = 0;
};

std::vector<EpsilonRecord> epsilon_sweep(const Graph& g, const std::vector<double>& eps_grid,
                                         std::size_t k);

/// 20 log-spaced thresholds in [1e-4, 1].
std::vector<double> default_epsilon_grid();

}  // namespace ndp::gen
