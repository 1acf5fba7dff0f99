#include "ndp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ndp/coarsen.hpp"
#include "ndp/partition.hpp"
#include "ndp/rng.hpp"

namespace ndp::gen {

namespace {

void add_edge(Matrix& a, std::size_t i, std::size_t j, double w = 1.0) {
    a(i, j) = w;
    a(j, i) = w;
}

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

}  // namespace

Graph grid(std::size_t rows, std::size_t cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("grid: sizes must be >= 2");
    const std::size_t n = rows * cols;
    Matrix a(n, n);
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) add_edge(a, id(r, c), id(r, c + 1));
            if (r + 1 < rows) add_edge(a, id(r, c), id(r + 1, c));
        }
    }
    return Graph(std::move(a));
}

Graph ring(std::size_t n) {
    if (n < 2) throw std::invalid_argument("ring: size must be >= 2");
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) add_edge(a, i, (i + 1) % n);
    return Graph(std::move(a));
}

Graph sbm(const std::vector<std::size_t>& block_sizes, double p_in, double p_out,
          std::uint64_t seed) {
    require_probability(p_in, "p_in");
    require_probability(p_out, "p_out");
    if (block_sizes.empty()) throw std::invalid_argument("sbm: no blocks");
    for (std::size_t b : block_sizes)
        if (b == 0) throw std::invalid_argument("sbm: empty block");

    std::vector<std::size_t> block_of;
    for (std::size_t b = 0; b < block_sizes.size(); ++b)
        block_of.insert(block_of.end(), block_sizes[b], b);

    const std::size_t n = block_of.size();
    Matrix a(n, n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = block_of[i] == block_of[j] ? p_in : p_out;
            if (rng.u01() < p) add_edge(a, i, j);
        }
    return Graph(std::move(a));
}

Graph sensor(std::size_t n, std::size_t k, double sigma, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sensor: need at least 2 nodes");
    if (k >= n) throw std::invalid_argument("sensor: k must be < n");
    if (k == 0) throw std::invalid_argument("sensor: k must be >= 1");

    Rng rng(seed);
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = rng.u01();
        py[i] = rng.u01();
    }
    auto dist2 = [&](std::size_t i, std::size_t j) {
        const double dx = px[i] - px[j];
        const double dy = py[i] - py[j];
        return dx * dx + dy * dy;
    };

    // k nearest neighbors of each node (ties broken by index).
    std::vector<std::vector<std::size_t>> knn(n);
    double knn_dist_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        others.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        std::stable_sort(others.begin(), others.end(),
                         [&](std::size_t a_, std::size_t b_) { return dist2(i, a_) < dist2(i, b_); });
        others.resize(k);
        for (std::size_t j : others) knn_dist_sum += std::sqrt(dist2(i, j));
        knn[i] = std::move(others);
    }
    if (sigma <= 0.0) sigma = knn_dist_sum / static_cast<double>(n * k);

    Matrix a(n, n);
    const double inv_s2 = 1.0 / (sigma * sigma);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : knn[i])
            add_edge(a, i, j, std::exp(-dist2(i, j) * inv_s2));  // union symmetrization
    return Graph(std::move(a));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    require_probability(p, "p");
    Matrix a(n, n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.u01() < p) add_edge(a, i, j);
    return Graph(std::move(a));
}

Graph community(std::size_t n, std::size_t n_communities, double p_in, double p_out,
                std::uint64_t seed) {
    require_probability(p_in, "p_in");
    require_probability(p_out, "p_out");
    if (n_communities == 0 || n_communities > n)
        throw std::invalid_argument("community: invalid community count");

    std::vector<std::size_t> block_of(n);
    for (std::size_t i = 0; i < n; ++i) block_of[i] = i % n_communities;

    Matrix a(n, n);
    Rng rng(seed);
    // Random spanning tree per community keeps every community connected.
    for (std::size_t c = 0; c < n_communities; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (block_of[i] == c) members.push_back(i);
        for (std::size_t m = 1; m < members.size(); ++m)
            add_edge(a, members[m], members[rng.index(m)]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = block_of[i] == block_of[j] ? p_in : p_out;
            if (a(i, j) == 0.0 && rng.u01() < p) add_edge(a, i, j);
        }
    return Graph(std::move(a));
}

std::vector<DensifyRecord> densify_sweep(const Graph& g, std::size_t steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("densify_sweep: steps must be >= 1");
    if (!two_coloring(g)) throw std::invalid_argument("densify_sweep: graph is not bipartite");
    if (!is_connected(g)) throw std::invalid_argument("densify_sweep: graph is not connected");

    const std::size_t n = g.n();
    const double pair_count = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;

    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.weight(i, j) == 0.0) missing.emplace_back(i, j);
    Rng rng(mix_seed(seed, 0));
    rng.shuffle(missing);

    std::vector<DensifyRecord> records;
    Matrix a = g.adjacency();
    std::size_t consumed = 0;
    for (std::size_t step = 0; step < steps; ++step) {
        if (step > 0) {
            // Spread the remaining absent edges over the remaining steps.
            const std::size_t target =
                missing.size() * step / (steps - 1);  // cumulative count after this step
            for (; consumed < target; ++consumed)
                add_edge(a, missing[consumed].first, missing[consumed].second);
        }
        const Graph current(a);
        DensifyRecord rec;
        rec.density = static_cast<double>(current.edge_count()) / pair_count;
        rec.spectral_gamma = spectral_partition(current).gamma;
        double random_sum = 0.0;
        for (std::size_t d = 0; d < kRandomCutDraws; ++d)
            random_sum += random_partition(current, mix_seed(seed, 1000 + step * kRandomCutDraws + d)).gamma;
        rec.random_gamma = random_sum / static_cast<double>(kRandomCutDraws);
        rec.upper_bound = maxcut_upper_bound(current).upper_bound;
        rec.trevisan_line = 1.0 - kTrevisanTau;
        records.push_back(rec);
    }
    return records;
}

std::vector<EpsilonRecord> epsilon_sweep(const Graph& g, const std::vector<double>& eps_grid,
                                         std::size_t k) {
    const Matrix lap = laplacian(g);
    std::vector<EpsilonRecord> records;
    records.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        EpsilonRecord rec;
        rec.epsilon = eps;
        const Graph sparsified(sparsify(g.adjacency(), eps));
        rec.edge_count = sparsified.edge_count();
        try {
            rec.spectral_distance = spectral_distance(lap, laplacian(sparsified), k);
        } catch (const std::invalid_argument&) {
            // Too few nonzero eigenvalues survive at this threshold.
            rec.spectral_distance = std::numeric_limits<double>::infinity();
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<double> default_epsilon_grid() {
    constexpr std::size_t kPoints = 20;
    std::vector<double> grid(kPoints);
    const double lo = std::log10(1e-4);
    const double hi = std::log10(1.0);
    for (std::size_t i = 0; i < kPoints; ++i)
        grid[i] = std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / (kPoints - 1));
    return grid;
}

}  // namespace ndp::gen
